/**
 * Incremental parser for text/event-stream payloads.
 *
 * The parser is a small state machine fed with arbitrary string chunks; it
 * survives frames split at any byte boundary, which is exactly what a
 * network delivers. Events are dispatched on the blank line that terminates
 * a frame, per the event-stream format: `event:` names the event type,
 * `data:` lines accumulate (joined with newlines), lines starting with a
 * colon are comments, and an optional single leading space after the field
 * colon is stripped.
 */

export interface SseEvent {
  event: string;
  data: string;
}

export class SseParser {
  private buffer = "";
  private eventType = "";
  private dataLines: string[] = [];

  /** Feed one chunk; returns every event completed by this chunk, in order. */
  feed(chunk: string): SseEvent[] {
    this.buffer += chunk;
    const events: SseEvent[] = [];
    for (;;) {
      const newline = this.buffer.indexOf("\n");
      if (newline === -1) {
        break;
      }
      let line = this.buffer.slice(0, newline);
      this.buffer = this.buffer.slice(newline + 1);
      if (line.endsWith("\r")) {
        line = line.slice(0, -1);
      }
      const event = this.consumeLine(line);
      if (event !== null) {
        events.push(event);
      }
    }
    return events;
  }

  /** Flush any dangling frame (streams normally end on a blank line). */
  end(): SseEvent[] {
    // One newline terminates a half-received line, the second one is the
    // blank line that dispatches whatever frame was accumulating.
    const events = this.feed("\n\n");
    this.buffer = "";
    return events;
  }

  private consumeLine(line: string): SseEvent | null {
    if (line === "") {
      if (this.dataLines.length === 0 && this.eventType === "") {
        return null;
      }
      const event: SseEvent = {
        event: this.eventType === "" ? "message" : this.eventType,
        data: this.dataLines.join("\n"),
      };
      this.eventType = "";
      this.dataLines = [];
      return event;
    }
    if (line.startsWith(":")) {
      return null;
    }
    const colon = line.indexOf(":");
    const field = colon === -1 ? line : line.slice(0, colon);
    let value = colon === -1 ? "" : line.slice(colon + 1);
    if (value.startsWith(" ")) {
      value = value.slice(1);
    }
    if (field === "event") {
      this.eventType = value;
    } else if (field === "data") {
      this.dataLines.push(value);
    }
    return null;
  }
}

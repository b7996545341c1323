import { describe, expect, it } from "vitest";

import { SseParser, type SseEvent } from "../src/stream.js";
import { SSE_TEXT } from "./fixtures.js";

function parseAll(chunks: string[]): SseEvent[] {
  const parser = new SseParser();
  const events: SseEvent[] = [];
  for (const chunk of chunks) {
    events.push(...parser.feed(chunk));
  }
  return events;
}

function chunked(text: string, size: number): string[] {
  const chunks: string[] = [];
  for (let i = 0; i < text.length; i += size) {
    chunks.push(text.slice(i, i + size));
  }
  return chunks;
}

describe("SseParser", () => {
  it("parses the full captured stream in one chunk", () => {
    const events = parseAll([SSE_TEXT]);

    expect(events).toHaveLength(13);
    expect(events.slice(0, 12).every((e) => e.event === "record")).toBe(true);
    expect(events[12]?.event).toBe("status");

    const steps = events.slice(0, 12).map((e) => (JSON.parse(e.data) as { step: number }).step);
    expect(steps).toEqual([0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]);

    expect(JSON.parse(events[12]?.data ?? "")).toEqual({
      status: "converged",
      converged: true,
      epochs_used: 3,
    });
  });

  it("survives delivery one character at a time", () => {
    const whole = parseAll([SSE_TEXT]);
    const dripped = parseAll(chunked(SSE_TEXT, 1));
    expect(dripped).toEqual(whole);
  });

  it("survives awkward chunk sizes that split frames and fields", () => {
    const whole = parseAll([SSE_TEXT]);
    for (const size of [2, 3, 7, 13, 41, 111]) {
      expect(parseAll(chunked(SSE_TEXT, size))).toEqual(whole);
    }
  });

  it("survives a split inside the field name and inside the JSON data", () => {
    const events = parseAll([
      "eve",
      "nt: rec",
      'ord\ndata: {"st',
      'ep":0}\n',
      "\n",
    ]);
    expect(events).toEqual([{ event: "record", data: '{"step":0}' }]);
  });

  it("joins multiple data lines with a newline", () => {
    const events = parseAll(["data: first\ndata: second\n\n"]);
    expect(events).toEqual([{ event: "message", data: "first\nsecond" }]);
  });

  it("ignores comment lines and tolerates CRLF line endings", () => {
    const events = parseAll([": keep-alive\r\nevent: status\r\ndata: {}\r\n\r\n"]);
    expect(events).toEqual([{ event: "status", data: "{}" }]);
  });

  it("strips exactly one optional space after the field colon", () => {
    const events = parseAll(["data:  padded\n\n", "data:tight\n\n"]);
    expect(events).toEqual([
      { event: "message", data: " padded" },
      { event: "message", data: "tight" },
    ]);
  });

  it("treats consecutive blank lines as no extra events", () => {
    const events = parseAll(["\n\n\nevent: a\ndata: 1\n\n\n\n"]);
    expect(events).toEqual([{ event: "a", data: "1" }]);
  });

  it("flushes a dangling frame on end()", () => {
    const parser = new SseParser();
    expect(parser.feed("event: status\ndata: {}")).toEqual([]);
    expect(parser.end()).toEqual([{ event: "status", data: "{}" }]);
    expect(parser.end()).toEqual([]);
  });
});

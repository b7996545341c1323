/**
 * Display model for the control panel.
 *
 * The panel is deliberately dumb: every displayed quantity is a value taken
 * verbatim from a service payload and rendered with `String(...)`. No model
 * arithmetic happens here — weights, nets, errors and epoch counts are never
 * added, scaled, or re-derived client-side. Only positional labels (w1, w2,
 * ...) are produced locally, from array order.
 */

import type {
  CreateResponse,
  IterationRecord,
  NetState,
  RunResult,
  SessionView,
  StatusEvent,
} from "./api.js";
import { isCloudState } from "./api.js";

/** Render a payload number exactly as JavaScript's shortest form. */
export function formatNumber(value: number): string {
  return String(value);
}

function labelled(prefix: string, values: readonly number[]): string {
  return values.map((v, i) => `${prefix}${i + 1}=${formatNumber(v)}`).join(" ");
}

export interface PanelView {
  sessionId: string;
  status: string;
  weightLine: string;
  biasLine: string;
  netLine: string;
  sampleLine: string;
  stepLine: string;
  outcomeLine: string;
}

export class PanelModel {
  private sessionId = "";
  private status = "";
  private weights: readonly number[] = [];
  private biases: readonly number[] | null = null;
  private lastRecord: IterationRecord | null = null;
  private converged: boolean | null = null;
  private epochsUsed: number | null = null;

  /** Start displaying a freshly created session. */
  applyCreate(response: CreateResponse): void {
    this.sessionId = response.id;
    this.status = response.status;
    this.lastRecord = null;
    this.converged = null;
    this.epochsUsed = null;
    if (isCloudState(response.state)) {
      this.weights = [];
      this.biases = null;
    } else {
      this.adoptNetState(response.state);
    }
  }

  /** Refresh from a full session view (same shape as create plus counters). */
  applySession(view: SessionView): void {
    this.sessionId = view.id;
    this.status = view.status;
    this.epochsUsed = view.epochs_used;
    if (!isCloudState(view.state)) {
      this.adoptNetState(view.state);
    }
  }

  /** Fold in the records returned by one step call (possibly empty). */
  applyRecords(records: readonly IterationRecord[]): void {
    const last = records[records.length - 1];
    if (last === undefined) {
      return;
    }
    this.lastRecord = last;
    this.weights = last.weights;
    this.biases = last.biases ?? this.biases;
  }

  /** Fold in one record arriving over the live stream. */
  applyRecord(record: IterationRecord): void {
    this.applyRecords([record]);
  }

  /** Terminal summary from a run call. */
  applyRun(result: RunResult): void {
    this.converged = result.converged;
    this.epochsUsed = result.epochs_used;
    this.status = result.converged ? "converged" : "exhausted";
  }

  /** Status frame from the live stream (or a session re-read). */
  applyStatus(event: StatusEvent): void {
    this.status = event.status;
    this.converged = event.converged;
    this.epochsUsed = event.epochs_used;
  }

  private adoptNetState(state: NetState): void {
    this.weights = state.weights;
    this.biases = state.biases ?? null;
  }

  view(): PanelView {
    const record = this.lastRecord;
    let netLine = "";
    let sampleLine = "";
    let stepLine = "";
    if (record !== null) {
      const nets: string[] = [`n1=${formatNumber(record.n1)}`];
      if (record.n2 !== undefined) {
        nets.push(`n2=${formatNumber(record.n2)}`);
      }
      if (record.n3 !== undefined) {
        nets.push(`n3=${formatNumber(record.n3)}`);
      }
      netLine = nets.join(" ");
      const inputs = record.inputs.map(formatNumber).join(",");
      sampleLine =
        `inputs (${inputs}) desired ${formatNumber(record.desired)} ` +
        `output ${formatNumber(record.output)} error ${formatNumber(record.error)}`;
      stepLine =
        `step ${formatNumber(record.step)} epoch ${formatNumber(record.epoch)} ` +
        `sample ${formatNumber(record.sample)}`;
    }
    let outcomeLine = "";
    if (this.converged !== null && this.epochsUsed !== null) {
      outcomeLine = `converged=${this.converged} epochs=${formatNumber(this.epochsUsed)}`;
    }
    return {
      sessionId: this.sessionId,
      status: this.status,
      weightLine: labelled("w", this.weights),
      biasLine: this.biases === null ? "" : labelled("b", this.biases),
      netLine,
      sampleLine,
      stepLine,
      outcomeLine,
    };
  }
}

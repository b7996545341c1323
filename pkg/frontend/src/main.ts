/**
 * Browser wiring: connects the form, the panel and the stage to the service.
 *
 * This module is intentionally thin glue over the tested building blocks
 * (`PlaybenchClient`, `PanelModel`, `cloudDrawOps`); it owns only DOM
 * plumbing and therefore carries no logic worth unit-testing.
 */

import {
  ApiError,
  PlaybenchClient,
  isCloudState,
  type CloudState,
  type IterationRecord,
  type SessionConfig,
  type StatusEvent,
} from "./api.js";
import { PanelModel } from "./panel.js";
import { DEFAULT_BOUNDS, DEFAULT_STAGE, cloudDrawOps } from "./stage.js";

const client = new PlaybenchClient("");
const panel = new PanelModel();

let sessionId: string | null = null;
let source: EventSource | null = null;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function renderPanel(): void {
  const view = panel.view();
  el("session-id").textContent = view.sessionId;
  el("status").textContent = view.status;
  el("weights").textContent = view.weightLine;
  el("biases").textContent = view.biasLine;
  el("nets").textContent = view.netLine;
  el("sample").textContent = view.sampleLine;
  el("step-info").textContent = view.stepLine;
  el("outcome").textContent = view.outcomeLine;
}

function renderCloud(cloud: CloudState): void {
  const canvas = el<HTMLCanvasElement>("stage");
  const ctx = canvas.getContext("2d");
  if (ctx === null) {
    return;
  }
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (const op of cloudDrawOps(cloud, DEFAULT_BOUNDS, DEFAULT_STAGE)) {
    ctx.fillStyle = op.color;
    if (op.kind === "point") {
      ctx.beginPath();
      ctx.arc(op.x, op.y, 4, 0, 2 * Math.PI);
      ctx.fill();
    } else {
      ctx.fillRect(op.x - 5, op.y - 5, 10, 10);
    }
  }
}

function showError(err: unknown): void {
  const box = el("error");
  if (err instanceof ApiError) {
    box.textContent = `${err.code}: ${err.message}`;
  } else {
    box.textContent = String(err);
  }
}

function clearError(): void {
  el("error").textContent = "";
}

function readConfig(): SessionConfig {
  const model = el<HTMLSelectElement>("model").value;
  const seedText = el<HTMLInputElement>("seed").value.trim();
  const seed = seedText === "" ? 0 : Number(seedText);
  if (model === "kmeans") {
    return {
      model: "kmeans",
      n: Number(el<HTMLInputElement>("n-points").value),
      k: Number(el<HTMLInputElement>("k-centers").value),
      seed,
    };
  }
  const gate = el<HTMLSelectElement>("gate").value;
  const lrText = el<HTMLInputElement>("lr").value.trim();
  const config: SessionConfig = {
    model: model === "mlp" ? "mlp" : "perceptron",
    gate,
    seed,
    shuffle: el<HTMLInputElement>("shuffle").checked,
    init: el<HTMLSelectElement>("init").value,
  };
  if (lrText !== "") {
    config.lr = Number(lrText);
  }
  if (model === "mlp") {
    config.mode = el<HTMLSelectElement>("mode").value;
  }
  return config;
}

function closeStream(): void {
  if (source !== null) {
    source.close();
    source = null;
  }
}

async function onCreate(): Promise<void> {
  clearError();
  closeStream();
  try {
    const response = await client.createSession(readConfig());
    sessionId = response.id;
    panel.applyCreate(response);
    renderPanel();
    if (isCloudState(response.state)) {
      renderCloud(response.state);
    }
  } catch (err) {
    showError(err);
  }
}

async function onExecute(): Promise<void> {
  if (sessionId === null) {
    return;
  }
  clearError();
  try {
    const records = await client.step(sessionId, 1);
    panel.applyRecords(records);
    const view = await client.getSession(sessionId);
    panel.applySession(view);
    renderPanel();
  } catch (err) {
    showError(err);
  }
}

async function onRun(): Promise<void> {
  if (sessionId === null) {
    return;
  }
  clearError();
  try {
    const result = await client.run(sessionId);
    panel.applyRun(result);
    const view = await client.getSession(sessionId);
    panel.applySession(view);
    renderPanel();
  } catch (err) {
    showError(err);
  }
}

function onWatch(): void {
  if (sessionId === null) {
    return;
  }
  clearError();
  closeStream();
  source = new EventSource(client.streamUrl(sessionId));
  source.addEventListener("record", (event) => {
    const record = JSON.parse((event as MessageEvent<string>).data) as IterationRecord;
    panel.applyRecord(record);
    renderPanel();
  });
  source.addEventListener("status", (event) => {
    const status = JSON.parse((event as MessageEvent<string>).data) as StatusEvent;
    panel.applyStatus(status);
    renderPanel();
    closeStream();
  });
  source.onerror = () => {
    closeStream();
  };
}

async function onDelete(): Promise<void> {
  if (sessionId === null) {
    return;
  }
  clearError();
  closeStream();
  try {
    await client.deleteSession(sessionId);
    sessionId = null;
  } catch (err) {
    showError(err);
  }
}

function onModelChange(): void {
  const model = el<HTMLSelectElement>("model").value;
  el("net-fields").style.display = model === "kmeans" ? "none" : "";
  el("kmeans-fields").style.display = model === "kmeans" ? "" : "none";
}

export function bootstrap(): void {
  el("create").addEventListener("click", () => void onCreate());
  el("execute").addEventListener("click", () => void onExecute());
  el("run").addEventListener("click", () => void onRun());
  el("watch").addEventListener("click", () => onWatch());
  el("delete").addEventListener("click", () => void onDelete());
  el("model").addEventListener("change", () => onModelChange());
  onModelChange();
}

bootstrap();

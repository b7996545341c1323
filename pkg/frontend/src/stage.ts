/**
 * Stage geometry: maps model coordinates onto a fixed pixel canvas.
 *
 * The mapping is a pure affine transform — the only client-side geometry the
 * UI performs, and it never touches model values (clusters, colors, weights):
 * colors arrive as hex strings in the payload and are passed through to the
 * draw operations verbatim.
 *
 * A point at (x_min, y_min) lands on the bottom-left pixel and (x_max, y_max)
 * on the top-right pixel: the vertical axis is flipped because canvas y grows
 * downward while model y grows upward.
 */

import type { CloudState, Pair } from "./api.js";

export interface StageSize {
  width: number;
  height: number;
}

export const DEFAULT_STAGE: StageSize = { width: 460, height: 340 };

export interface Bounds {
  x_min: number;
  x_max: number;
  y_min: number;
  y_max: number;
}

export const DEFAULT_BOUNDS: Bounds = {
  x_min: -230,
  x_max: 230,
  y_min: -170,
  y_max: 170,
};

export interface Pixel {
  x: number;
  y: number;
}

/** Affine map from model coordinates to integer pixel coordinates. */
export function toPixel(point: Pair, bounds: Bounds, size: StageSize = DEFAULT_STAGE): Pixel {
  const [x, y] = point;
  const xSpan = bounds.x_max - bounds.x_min;
  const ySpan = bounds.y_max - bounds.y_min;
  const px =
    xSpan === 0 ? (size.width - 1) / 2 : ((x - bounds.x_min) / xSpan) * (size.width - 1);
  const py =
    ySpan === 0 ? (size.height - 1) / 2 : ((bounds.y_max - y) / ySpan) * (size.height - 1);
  return { x: Math.round(px), y: Math.round(py) };
}

export type DrawKind = "point" | "center";

export interface DrawOp {
  kind: DrawKind;
  x: number;
  y: number;
  /** For points: the payload color, untouched. Centers use a fixed marker color. */
  color: string;
}

/** Marker color for centers — a fixed style constant, not model data. */
export const CENTER_COLOR = "#000000";

/**
 * Produce draw operations for a colored cloud: one `point` op per point with
 * its payload color passed through verbatim, then one `center` op per center
 * so centers paint on top.
 */
export function cloudDrawOps(
  cloud: CloudState,
  bounds: Bounds = DEFAULT_BOUNDS,
  size: StageSize = DEFAULT_STAGE,
): DrawOp[] {
  const ops: DrawOp[] = [];
  cloud.points.forEach((point, i) => {
    const pixel = toPixel(point, bounds, size);
    ops.push({ kind: "point", x: pixel.x, y: pixel.y, color: cloud.colors[i] ?? CENTER_COLOR });
  });
  for (const center of cloud.centers) {
    const pixel = toPixel(center, bounds, size);
    ops.push({ kind: "center", x: pixel.x, y: pixel.y, color: CENTER_COLOR });
  }
  return ops;
}

import { describe, expect, it } from "vitest";

import type { CloudState, CreateResponse } from "../src/api.js";
import {
  CENTER_COLOR,
  DEFAULT_BOUNDS,
  DEFAULT_STAGE,
  cloudDrawOps,
  toPixel,
} from "../src/stage.js";
import { KMEANS_CREATE_JSON } from "./fixtures.js";

function fixtureCloud(): CloudState {
  const created = JSON.parse(KMEANS_CREATE_JSON) as CreateResponse;
  return created.state as CloudState;
}

describe("toPixel", () => {
  it("maps the bounds corners onto the stage corners", () => {
    expect(toPixel([-230, -170], DEFAULT_BOUNDS)).toEqual({ x: 0, y: 339 });
    expect(toPixel([230, 170], DEFAULT_BOUNDS)).toEqual({ x: 459, y: 0 });
    expect(toPixel([-230, 170], DEFAULT_BOUNDS)).toEqual({ x: 0, y: 0 });
    expect(toPixel([230, -170], DEFAULT_BOUNDS)).toEqual({ x: 459, y: 339 });
  });

  it("flips the vertical axis: larger model y means smaller pixel y", () => {
    const low = toPixel([0, -100], DEFAULT_BOUNDS);
    const high = toPixel([0, 100], DEFAULT_BOUNDS);
    expect(high.y).toBeLessThan(low.y);
    expect(high.x).toBe(low.x);
  });

  it("is affine: a known interior point lands on the expected pixel", () => {
    // x: (164 + 230) / 460 * 459 = 393.143...  -> 393
    // y: (170 - (-13)) / 340 * 339 = 182.461... -> 182
    expect(toPixel([164, -13], DEFAULT_BOUNDS)).toEqual({ x: 393, y: 182 });
  });

  it("centers degenerate bounds instead of dividing by zero", () => {
    const flat = { x_min: 5, x_max: 5, y_min: -2, y_max: -2 };
    const pixel = toPixel([5, -2], flat);
    expect(pixel).toEqual({
      x: Math.round((DEFAULT_STAGE.width - 1) / 2),
      y: Math.round((DEFAULT_STAGE.height - 1) / 2),
    });
  });

  it("respects a custom stage size", () => {
    const size = { width: 11, height: 5 };
    expect(toPixel([230, -170], DEFAULT_BOUNDS, size)).toEqual({ x: 10, y: 4 });
    expect(toPixel([-230, 170], DEFAULT_BOUNDS, size)).toEqual({ x: 0, y: 0 });
  });
});

describe("cloudDrawOps", () => {
  it("emits one op per point then one per center, points first", () => {
    const cloud = fixtureCloud();
    const ops = cloudDrawOps(cloud);
    expect(ops).toHaveLength(cloud.points.length + cloud.centers.length);
    expect(ops.slice(0, cloud.points.length).every((op) => op.kind === "point")).toBe(true);
    expect(ops.slice(cloud.points.length).every((op) => op.kind === "center")).toBe(true);
  });

  it("passes payload colors through verbatim", () => {
    const cloud = fixtureCloud();
    const ops = cloudDrawOps(cloud);
    const pointColors = ops.slice(0, cloud.points.length).map((op) => op.color);
    expect(pointColors).toEqual(cloud.colors);
    expect(pointColors).toEqual([
      "#2ca02c",
      "#ff7f0e",
      "#ff7f0e",
      "#2ca02c",
      "#ff7f0e",
      "#1f77b4",
    ]);
    expect(ops.slice(cloud.points.length).every((op) => op.color === CENTER_COLOR)).toBe(true);
  });

  it("keeps every op inside the stage", () => {
    const ops = cloudDrawOps(fixtureCloud());
    for (const op of ops) {
      expect(op.x).toBeGreaterThanOrEqual(0);
      expect(op.x).toBeLessThan(DEFAULT_STAGE.width);
      expect(op.y).toBeGreaterThanOrEqual(0);
      expect(op.y).toBeLessThan(DEFAULT_STAGE.height);
    }
  });

  it("maps each point with the same transform as toPixel", () => {
    const cloud = fixtureCloud();
    const ops = cloudDrawOps(cloud);
    cloud.points.forEach((point, i) => {
      const expected = toPixel(point, DEFAULT_BOUNDS, DEFAULT_STAGE);
      expect(ops[i]).toEqual({ kind: "point", x: expected.x, y: expected.y, color: cloud.colors[i] });
    });
  });

  it("preserves left-to-right order of model x in pixel x", () => {
    const cloud = fixtureCloud();
    const ops = cloudDrawOps(cloud);
    // points[0] = [164, -13] is right of points[1] = [-213, 85]
    expect(ops[0]?.x ?? 0).toBeGreaterThan(ops[1]?.x ?? 0);
  });
});

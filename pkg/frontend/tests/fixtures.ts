/**
 * Frozen service payloads, captured byte-for-byte from the engine.
 *
 * Tests feed these to the client, panel, stage and stream parser so the
 * frontend is checked against exactly what the service emits.
 */

/** Four consecutive step responses (count=1) for an and2 perceptron session. */
export const CLICK_RESPONSES: readonly string[] = [
  "[{\"step\":0,\"epoch\":0,\"sample\":0,\"inputs\":[0,0],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.0,0.0]}]",
  "[{\"step\":1,\"epoch\":0,\"sample\":1,\"inputs\":[0,1],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.0,0.0]}]",
  "[{\"step\":2,\"epoch\":0,\"sample\":2,\"inputs\":[1,0],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.0,0.0]}]",
  "[{\"step\":3,\"epoch\":0,\"sample\":3,\"inputs\":[1,1],\"desired\":1,\"n1\":0.0,\"output\":0,\"error\":1,\"weights\":[0.5,0.5]}]",
];

/** Full JSON trace envelope of the same session run to convergence. */
export const TRACE_JSON: string = "{\"config\":{\"model\":\"perceptron\",\"gate\":\"and2\",\"mode\":null,\"lr\":0.5,\"init\":\"zeros\",\"init_values\":null,\"seed\":0,\"include_zero_row\":true,\"shuffle\":false,\"max_epochs\":1000},\"records\":[{\"step\":0,\"epoch\":0,\"sample\":0,\"inputs\":[0,0],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.0,0.0]},{\"step\":1,\"epoch\":0,\"sample\":1,\"inputs\":[0,1],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.0,0.0]},{\"step\":2,\"epoch\":0,\"sample\":2,\"inputs\":[1,0],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.0,0.0]},{\"step\":3,\"epoch\":0,\"sample\":3,\"inputs\":[1,1],\"desired\":1,\"n1\":0.0,\"output\":0,\"error\":1,\"weights\":[0.5,0.5]},{\"step\":4,\"epoch\":1,\"sample\":0,\"inputs\":[0,0],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.5,0.5]},{\"step\":5,\"epoch\":1,\"sample\":1,\"inputs\":[0,1],\"desired\":0,\"n1\":0.5,\"output\":0,\"error\":0,\"weights\":[0.5,0.5]},{\"step\":6,\"epoch\":1,\"sample\":2,\"inputs\":[1,0],\"desired\":0,\"n1\":0.5,\"output\":0,\"error\":0,\"weights\":[0.5,0.5]},{\"step\":7,\"epoch\":1,\"sample\":3,\"inputs\":[1,1],\"desired\":1,\"n1\":1.0,\"output\":1,\"error\":0,\"weights\":[0.5,0.5]},{\"step\":8,\"epoch\":2,\"sample\":0,\"inputs\":[0,0],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.5,0.5]},{\"step\":9,\"epoch\":2,\"sample\":1,\"inputs\":[0,1],\"desired\":0,\"n1\":0.5,\"output\":0,\"error\":0,\"weights\":[0.5,0.5]},{\"step\":10,\"epoch\":2,\"sample\":2,\"inputs\":[1,0],\"desired\":0,\"n1\":0.5,\"output\":0,\"error\":0,\"weights\":[0.5,0.5]},{\"step\":11,\"epoch\":2,\"sample\":3,\"inputs\":[1,1],\"desired\":1,\"n1\":1.0,\"output\":1,\"error\":0,\"weights\":[0.5,0.5]}],\"converged\":true,\"epochs_used\":3}";

/** The same trace as delimited text. */
export const TRACE_CSV: string = "step,epoch,sample,in1,in2,desired,n1,output,error,w1,w2\n0,0,0,0,0,0,0.0,0,0,0.0,0.0\n1,0,1,0,1,0,0.0,0,0,0.0,0.0\n2,0,2,1,0,0,0.0,0,0,0.0,0.0\n3,0,3,1,1,1,0.0,0,1,0.5,0.5\n4,1,0,0,0,0,0.0,0,0,0.5,0.5\n5,1,1,0,1,0,0.5,0,0,0.5,0.5\n6,1,2,1,0,0,0.5,0,0,0.5,0.5\n7,1,3,1,1,1,1.0,1,0,0.5,0.5\n8,2,0,0,0,0,0.0,0,0,0.5,0.5\n9,2,1,0,1,0,0.5,0,0,0.5,0.5\n10,2,2,1,0,0,0.5,0,0,0.5,0.5\n11,2,3,1,1,1,1.0,1,0,0.5,0.5\n";

/** Create response for a fresh and2 perceptron session. */
export const NET_CREATE_JSON: string = "{\"id\":\"bbbbbbbbbbbbbbbbbbbbbbbbbbbbbbbb\",\"state\":{\"weights\":[0.0,0.0]},\"status\":\"running\"}";

/** Create response for a kmeans session (n=6, k=3, seed=1). */
export const KMEANS_CREATE_JSON: string = "{\"id\":\"aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa\",\"state\":{\"points\":[[164,-13],[-213,85],[-90,0],[110,18],[-76,27],[-76,-59]],\"centers\":[[-111,-85],[-90,57],[190,-169]],\"clusters\":[2,1,1,2,1,0],\"colors\":[\"#2ca02c\",\"#ff7f0e\",\"#ff7f0e\",\"#2ca02c\",\"#ff7f0e\",\"#1f77b4\"]},\"status\":\"converged\"}";

/** Live stream text: twelve record frames then the terminal status frame. */
export const SSE_TEXT: string = "event: record\ndata: {\"step\":0,\"epoch\":0,\"sample\":0,\"inputs\":[0,0],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.0,0.0]}\n\nevent: record\ndata: {\"step\":1,\"epoch\":0,\"sample\":1,\"inputs\":[0,1],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.0,0.0]}\n\nevent: record\ndata: {\"step\":2,\"epoch\":0,\"sample\":2,\"inputs\":[1,0],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.0,0.0]}\n\nevent: record\ndata: {\"step\":3,\"epoch\":0,\"sample\":3,\"inputs\":[1,1],\"desired\":1,\"n1\":0.0,\"output\":0,\"error\":1,\"weights\":[0.5,0.5]}\n\nevent: record\ndata: {\"step\":4,\"epoch\":1,\"sample\":0,\"inputs\":[0,0],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.5,0.5]}\n\nevent: record\ndata: {\"step\":5,\"epoch\":1,\"sample\":1,\"inputs\":[0,1],\"desired\":0,\"n1\":0.5,\"output\":0,\"error\":0,\"weights\":[0.5,0.5]}\n\nevent: record\ndata: {\"step\":6,\"epoch\":1,\"sample\":2,\"inputs\":[1,0],\"desired\":0,\"n1\":0.5,\"output\":0,\"error\":0,\"weights\":[0.5,0.5]}\n\nevent: record\ndata: {\"step\":7,\"epoch\":1,\"sample\":3,\"inputs\":[1,1],\"desired\":1,\"n1\":1.0,\"output\":1,\"error\":0,\"weights\":[0.5,0.5]}\n\nevent: record\ndata: {\"step\":8,\"epoch\":2,\"sample\":0,\"inputs\":[0,0],\"desired\":0,\"n1\":0.0,\"output\":0,\"error\":0,\"weights\":[0.5,0.5]}\n\nevent: record\ndata: {\"step\":9,\"epoch\":2,\"sample\":1,\"inputs\":[0,1],\"desired\":0,\"n1\":0.5,\"output\":0,\"error\":0,\"weights\":[0.5,0.5]}\n\nevent: record\ndata: {\"step\":10,\"epoch\":2,\"sample\":2,\"inputs\":[1,0],\"desired\":0,\"n1\":0.5,\"output\":0,\"error\":0,\"weights\":[0.5,0.5]}\n\nevent: record\ndata: {\"step\":11,\"epoch\":2,\"sample\":3,\"inputs\":[1,1],\"desired\":1,\"n1\":1.0,\"output\":1,\"error\":0,\"weights\":[0.5,0.5]}\n\nevent: status\ndata: {\"status\":\"converged\",\"converged\":true,\"epochs_used\":3}\n\n";

/** Run response for the and2 session. */
export const RUN_JSON: string = "{\"converged\":true,\"epochs_used\":3}";

/** Error bodies as the service sends them. */
export const ERROR_422_JSON: string = "{\"code\":\"invalid_config\",\"message\":\"gate: unknown gate 'xor9'\",\"fields\":[\"gate\"]}";
export const ERROR_404_JSON: string = "{\"code\":\"not_found\",\"message\":\"no session with id ffffffffffffffffffffffffffffffff\",\"fields\":[]}";

/**
 * Low-level bridge to the toolkit process.
 *
 * Each call spawns `python -m crosseval.cli call <fn>`, passes the keyword
 * arguments as JSON on stdin and parses the JSON result from stdout.
 * Numbers survive the round trip bit-for-bit: the toolkit serialises
 * doubles with shortest round-trip precision and JSON.parse restores the
 * identical IEEE value.
 */

import { spawnSync } from "node:child_process";

export interface BridgeOptions {
  /** Python interpreter running the toolkit (default: $CROSSEVAL_PYTHON or python3). */
  python?: string;
}

export class ToolkitError extends Error {}

export function callToolkit<T>(
  fn: string,
  kwargs: Record<string, unknown>,
  options: BridgeOptions = {},
): T {
  const python = options.python ?? process.env.CROSSEVAL_PYTHON ?? "python3";
  const proc = spawnSync(python, ["-m", "crosseval.cli", "call", fn], {
    input: JSON.stringify(kwargs),
    encoding: "utf8",
    maxBuffer: 256 * 1024 * 1024,
  });
  if (proc.error) {
    throw proc.error;
  }
  if (proc.status !== 0) {
    const stderr = (proc.stderr ?? "").trim();
    const message = stderr.startsWith("error: ") ? stderr.slice(7) : stderr;
    throw new ToolkitError(message || `toolkit call '${fn}' failed`);
  }
  return (JSON.parse(proc.stdout) as { result: T }).result;
}

// Read-only API client for the walkthrough server.

import { FlowGraph, ProcedureListing, validateFlow } from "./schema.js";

export class ApiError extends Error {
  constructor(message: string, readonly status?: number) {
    super(message);
  }
}

export async function fetchProcedures(base = ""): Promise<ProcedureListing[]> {
  const resp = await fetch(`${base}/api/procedures`);
  if (!resp.ok) throw new ApiError(`listing failed (${resp.status})`, resp.status);
  return (await resp.json()) as ProcedureListing[];
}

export async function fetchFlow(id: string, base = ""): Promise<FlowGraph> {
  const resp = await fetch(`${base}/api/procedures/${encodeURIComponent(id)}/flow`);
  if (resp.status === 404) throw new ApiError(`procedure ${id} not found`, 404);
  if (!resp.ok) throw new ApiError(`flow fetch failed (${resp.status})`, resp.status);
  return validateFlow(await resp.json());
}

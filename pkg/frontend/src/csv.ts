import { readFileSync } from "fs";
import Papa from "papaparse";

// The benchmark harness CSV contract. `jaccard` is empty for algorithms
// that keep no Pareto front (S-UCB).
export const REQUIRED_COLUMNS = [
    "algo",
    "trial",
    "t",
    "arm",
    "instant_psg",
    "cum_pareto_regret",
    "front_size",
    "jaccard",
] as const;

export interface RecordRow {
    algo: string;
    trial: number;
    t: number;
    cum_pareto_regret: number;
    jaccard: number | null;
}

export class SchemaError extends Error {
    readonly missing: string[];
    constructor(missing: string[]) {
        super(`input CSV is missing required column(s): ${missing.join(", ")}`);
        this.missing = missing;
    }
}

export function parseRecords(text: string): RecordRow[] {
    const parsed = Papa.parse<Record<string, string>>(text.trim(), {
        header: true,
        skipEmptyLines: true,
    });
    const fields = parsed.meta.fields ?? [];
    const missing = REQUIRED_COLUMNS.filter(name => !fields.includes(name));
    if (missing.length > 0) {
        throw new SchemaError(missing);
    }
    return parsed.data.map(row => ({
        algo: row.algo,
        trial: Number(row.trial),
        t: Number(row.t),
        cum_pareto_regret: Number(row.cum_pareto_regret),
        jaccard: row.jaccard === "" ? null : Number(row.jaccard),
    }));
}

export function loadRecords(path: string): RecordRow[] {
    return parseRecords(readFileSync(path, "utf8"));
}

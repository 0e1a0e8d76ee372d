import type { RecordRow } from "./csv.js";

export type Metric = "regret" | "jaccard";

// One plotted line: the per-round mean across trials plus the width of the
// +-1 stddev band (population stddev, matching the harness summary).
export interface Series {
    algo: string;
    t: number[];
    mean: number[];
    std: number[];
}

function mean(values: number[]): number {
    return values.reduce((acc, v) => acc + v, 0) / values.length;
}

function populationStd(values: number[], mu: number): number {
    const variance = values.reduce((acc, v) => acc + (v - mu) ** 2, 0) / values.length;
    return Math.sqrt(variance);
}

function metricValue(row: RecordRow, metric: Metric): number | null {
    return metric === "regret" ? row.cum_pareto_regret : row.jaccard;
}

/**
 * Aggregate the round records into one mean/std series per algorithm.
 *
 * Algorithms whose metric column is entirely empty (S-UCB for the Jaccard
 * metric) are dropped. An optional roster filter keeps only the named
 * algorithms; filtering everything away is an error.
 */
export function buildSeries(rows: RecordRow[], metric: Metric, algos?: string[]): Series[] {
    const byAlgo = new Map<string, Map<number, number[]>>();
    for (const row of rows) {
        if (algos && !algos.includes(row.algo)) continue;
        const value = metricValue(row, metric);
        if (value === null || Number.isNaN(value)) continue;
        let byRound = byAlgo.get(row.algo);
        if (!byRound) {
            byRound = new Map();
            byAlgo.set(row.algo, byRound);
        }
        const bucket = byRound.get(row.t);
        if (bucket) {
            bucket.push(value);
        } else {
            byRound.set(row.t, [value]);
        }
    }
    if (byAlgo.size === 0) {
        throw new Error(
            algos
                ? `no data left after filtering to algorithms [${algos.join(", ")}]`
                : `no plottable data for metric '${metric}'`,
        );
    }
    const series: Series[] = [];
    for (const algo of [...byAlgo.keys()].sort()) {
        const byRound = byAlgo.get(algo)!;
        const ts = [...byRound.keys()].sort((a, b) => a - b);
        const means: number[] = [];
        const stds: number[] = [];
        for (const t of ts) {
            const values = byRound.get(t)!;
            const mu = mean(values);
            means.push(mu);
            stds.push(populationStd(values, mu));
        }
        series.push({ algo, t: ts, mean: means, std: stds });
    }
    return series;
}

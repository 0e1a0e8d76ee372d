import { describe, expect, it } from "vitest";

import { buildSeries } from "../src/aggregate.js";
import { parseRecords } from "../src/csv.js";

const HEADER = "algo,trial,t,arm,instant_psg,cum_pareto_regret,front_size,jaccard";

function csv(lines: string[]): string {
    return [HEADER, ...lines].join("\n");
}

const SMALL = csv([
    "moglb,0,1,2,0.1,0.1,3,0.5",
    "moglb,1,1,0,0.3,0.3,2,0.7",
    "moglb,0,2,2,0.1,0.2,3,0.6",
    "moglb,1,2,0,0.1,0.4,2,0.8",
    "sucb,0,1,1,0.2,0.2,0,",
    "sucb,1,1,1,0.4,0.4,0,",
    "sucb,0,2,1,0.2,0.4,0,",
    "sucb,1,2,1,0.0,0.4,0,",
]);

describe("buildSeries", () => {
    it("averages across trials with a population stddev band", () => {
        const series = buildSeries(parseRecords(SMALL), "regret");
        const moglb = series.find(s => s.algo === "moglb")!;
        expect(moglb.t).toEqual([1, 2]);
        expect(moglb.mean[0]).toBeCloseTo(0.2, 12);
        expect(moglb.mean[1]).toBeCloseTo(0.3, 12);
        // population std of {0.1, 0.3} is 0.1
        expect(moglb.std[0]).toBeCloseTo(0.1, 12);
        expect(moglb.std[1]).toBeCloseTo(0.1, 12);
    });

    it("keeps every algorithm for the regret metric", () => {
        const series = buildSeries(parseRecords(SMALL), "regret");
        expect(series.map(s => s.algo)).toEqual(["moglb", "sucb"]);
    });

    it("drops algorithms with an empty jaccard column", () => {
        const series = buildSeries(parseRecords(SMALL), "jaccard");
        expect(series.map(s => s.algo)).toEqual(["moglb"]);
        expect(series[0].mean).toEqual([0.6, 0.7]);
    });

    it("applies the algorithm filter", () => {
        const series = buildSeries(parseRecords(SMALL), "regret", ["sucb"]);
        expect(series.map(s => s.algo)).toEqual(["sucb"]);
    });

    it("rejects a filter that leaves nothing", () => {
        expect(() => buildSeries(parseRecords(SMALL), "regret", ["nothere"])).toThrow(/filtering/);
    });

    it("is a pure function of the rows", () => {
        const rows = parseRecords(SMALL);
        expect(buildSeries(rows, "regret")).toEqual(buildSeries(rows, "regret"));
    });
});

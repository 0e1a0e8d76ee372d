import { mkdtempSync, existsSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";

import { describe, expect, it } from "vitest";

import { SchemaError, parseRecords, loadRecords } from "../src/csv.js";
import { render } from "../src/render.js";

// Acceptance: regret and jaccard figures render from a 4-algorithm CSV with
// 4 and 3 series respectively, and a truncated CSV fails with an error
// naming the missing column.

const FIXTURE = join(__dirname, "fixtures", "records.csv");

describe("acceptance", () => {
    it("regret figure: 4 series from the 4-algorithm CSV", () => {
        const out = join(mkdtempSync(join(tmpdir(), "accept-")), "regret.svg");
        const result = render({ input: FIXTURE, metric: "regret", out });
        expect(result.seriesCount).toBe(4);
        expect(existsSync(out)).toBe(true);
    });

    it("jaccard figure: 3 series (S-UCB auto-skipped)", () => {
        const out = join(mkdtempSync(join(tmpdir(), "accept-")), "jaccard.svg");
        const result = render({ input: FIXTURE, metric: "jaccard", out });
        expect(result.seriesCount).toBe(3);
        expect(existsSync(out)).toBe(true);
    });

    it("truncated CSV fails with a named-column error", () => {
        const full = loadRecords(FIXTURE);
        expect(full.length).toBeGreaterThan(0);
        const truncated =
            "algo,trial,t,arm,instant_psg,cum_pareto_regret,front_size\n" +
            "moglb,0,1,4,0.25,0.25,12\n";
        try {
            parseRecords(truncated);
            expect.unreachable();
        } catch (err) {
            expect(err).toBeInstanceOf(SchemaError);
            expect((err as Error).message).toContain("jaccard");
        }
    });
});

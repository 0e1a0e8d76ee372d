import { parseArgs } from "util";

import { SchemaError } from "./csv.js";
import { render, type PlotSpec } from "./render.js";

const USAGE =
    "usage: plot --input <records.csv> --metric regret|jaccard --out <figure.svg> [--algos a,b,c]";

export function specFromArgv(argv: string[]): PlotSpec {
    const { values } = parseArgs({
        args: argv,
        options: {
            input: { type: "string" },
            metric: { type: "string" },
            out: { type: "string" },
            algos: { type: "string" },
        },
    });
    if (!values.input || !values.metric || !values.out) {
        throw new Error(USAGE);
    }
    if (values.metric !== "regret" && values.metric !== "jaccard") {
        throw new Error(`--metric must be 'regret' or 'jaccard', got '${values.metric}'`);
    }
    return {
        input: values.input,
        metric: values.metric,
        out: values.out,
        algos: values.algos ? values.algos.split(",").map(s => s.trim()).filter(Boolean) : undefined,
    };
}

export function main(argv: string[]): number {
    let spec: PlotSpec;
    try {
        spec = specFromArgv(argv);
    } catch (err) {
        console.error(`error: ${(err as Error).message}`);
        return 1;
    }
    try {
        const { out, seriesCount } = render(spec);
        console.log(`wrote ${out} (${seriesCount} series, metric=${spec.metric})`);
        return 0;
    } catch (err) {
        if (err instanceof SchemaError) {
            console.error(`error: ${err.message}`);
            return 1;
        }
        console.error(`error: ${(err as Error).message}`);
        return 2;
    }
}

if (import.meta.url === `file://${process.argv[1]}`) {
    process.exit(main(process.argv.slice(2)));
}

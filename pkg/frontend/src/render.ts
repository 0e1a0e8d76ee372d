import { mkdirSync, writeFileSync } from "fs";
import { dirname } from "path";
import * as echarts from "echarts";

import { buildSeries, type Metric, type Series } from "./aggregate.js";
import { loadRecords } from "./csv.js";

export interface PlotSpec {
    input: string;
    metric: Metric;
    out: string;
    algos?: string[];
}

const PALETTE = ["#5470c6", "#91cc75", "#fac858", "#ee6666", "#73c0de", "#3ba272"];

const METRIC_LABEL: Record<Metric, string> = {
    regret: "cumulative Pareto regret",
    jaccard: "Jaccard index",
};

export function buildOption(series: Series[], metric: Metric): echarts.EChartsOption {
    const charted: echarts.SeriesOption[] = [];
    series.forEach((s, i) => {
        const color = PALETTE[i % PALETTE.length];
        const lower = s.mean.map((m, j) => [s.t[j], m - s.std[j]]);
        const width = s.std.map((sd, j) => [s.t[j], 2 * sd]);
        const line = s.mean.map((m, j) => [s.t[j], m]);
        // invisible floor + stacked band give the +-1 stddev envelope
        charted.push({
            name: `${s.algo}-band-low`,
            type: "line",
            data: lower,
            stack: `band-${s.algo}`,
            lineStyle: { opacity: 0 },
            symbol: "none",
            silent: true,
            tooltip: { show: false },
        });
        charted.push({
            name: `${s.algo}-band`,
            type: "line",
            data: width,
            stack: `band-${s.algo}`,
            lineStyle: { opacity: 0 },
            areaStyle: { color, opacity: 0.15 },
            symbol: "none",
            silent: true,
            tooltip: { show: false },
        });
        charted.push({
            name: s.algo,
            type: "line",
            data: line,
            color,
            symbol: "none",
            lineStyle: { width: 2 },
        });
    });
    return {
        animation: false,
        legend: { data: series.map(s => s.algo), top: 8 },
        xAxis: { type: "value", name: "round t", nameLocation: "middle", nameGap: 28 },
        yAxis: { type: "value", name: METRIC_LABEL[metric], nameLocation: "middle", nameGap: 45 },
        grid: { left: 70, right: 30, top: 45, bottom: 50 },
        series: charted,
    };
}

export function renderSvg(spec: PlotSpec): { svg: string; series: Series[] } {
    const rows = loadRecords(spec.input);
    const series = buildSeries(rows, spec.metric, spec.algos);
    const chart = echarts.init(null, null, { renderer: "svg", ssr: true, width: 900, height: 600 });
    chart.setOption(buildOption(series, spec.metric));
    const svg = chart.renderToSVGString();
    chart.dispose();
    return { svg, series };
}

export function render(spec: PlotSpec): { out: string; seriesCount: number } {
    const { svg, series } = renderSvg(spec);
    mkdirSync(dirname(spec.out), { recursive: true });
    writeFileSync(spec.out, svg, "utf8");
    return { out: spec.out, seriesCount: series.length };
}

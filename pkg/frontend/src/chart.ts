// Comparison chart: one toggleable series per area, scatter points with
// horizontal (age) and vertical (height) error bars. echarts supplies the
// legend toggling, zoom and image download; the error bars are drawn by a
// custom series that shares each scatter series' name so the legend hides
// both together.

import type { ChartPointJson, ChartSeriesJson } from "./api.js";

// echarts arrives as a plain vendor <script>, not a module import
declare const echarts: any;

export interface ErrorBarBounds {
  xLow: number;
  xHigh: number;
  yLow: number;
  yHigh: number;
}

export function errorBarBounds(p: ChartPointJson): ErrorBarBounds {
  return {
    xLow: p.x - p.x_minus,
    xHigh: p.x + p.x_plus,
    yLow: p.y - p.y_err,
    yHigh: p.y + p.y_err,
  };
}

export interface SeriesPlotData {
  name: string;
  /** [x, y, observation_id] per point */
  scatter: number[][];
  /** [x, y, xLow, xHigh, yLow, yHigh] per point */
  errorBars: number[][];
}

export function seriesToPlotData(series: ChartSeriesJson[]): SeriesPlotData[] {
  return series.map((s) => ({
    name: s.area_name || `Area ${s.area_id}`,
    scatter: s.points.map((p) => [p.x, p.y, p.observation_id]),
    errorBars: s.points.map((p) => {
      const b = errorBarBounds(p);
      return [p.x, p.y, b.xLow, b.xHigh, b.yLow, b.yHigh];
    }),
  }));
}

function renderErrorBarItem(_params: any, api: any): any {
  const left = api.coord([api.value(2), api.value(1)]);
  const right = api.coord([api.value(3), api.value(1)]);
  const bottom = api.coord([api.value(0), api.value(4)]);
  const top = api.coord([api.value(0), api.value(5)]);
  const style = api.style({ fill: undefined, stroke: api.visual("color"), lineWidth: 1 });
  const cap = 4;
  const line = (x1: number, y1: number, x2: number, y2: number) => ({
    type: "line",
    shape: { x1, y1, x2, y2 },
    style,
  });
  return {
    type: "group",
    children: [
      line(left[0], left[1], right[0], right[1]),
      line(left[0], left[1] - cap, left[0], left[1] + cap),
      line(right[0], right[1] - cap, right[0], right[1] + cap),
      line(bottom[0], bottom[1], top[0], top[1]),
      line(bottom[0] - cap, bottom[1], bottom[0] + cap, bottom[1]),
      line(top[0] - cap, top[1], top[0] + cap, top[1]),
    ],
  };
}

export function chartOptions(series: ChartSeriesJson[]): any {
  const plotData = seriesToPlotData(series);
  const echartsSeries: any[] = [];
  for (const s of plotData) {
    echartsSeries.push({
      name: s.name,
      type: "scatter",
      symbolSize: 7,
      data: s.scatter,
      encode: { x: 0, y: 1 },
    });
    echartsSeries.push({
      name: s.name,
      type: "custom",
      renderItem: renderErrorBarItem,
      data: s.errorBars,
      encode: { x: [0, 2, 3], y: [1, 4, 5] },
      z: 1,
      silent: true,
    });
  }
  return {
    legend: { type: "scroll", top: 0 },
    tooltip: {
      trigger: "item",
      formatter: (info: any) =>
        `${info.seriesName}<br/>observation ${info.value[2]}<br/>` +
        `age ${info.value[0]}, height ${info.value[1]} m`,
    },
    grid: { top: 40, left: 60, right: 30, bottom: 70 },
    xAxis: { type: "value", name: "calendar year" },
    yAxis: { type: "value", name: "height (m)" },
    dataZoom: [
      { type: "inside", xAxisIndex: 0 },
      { type: "slider", xAxisIndex: 0, bottom: 10 },
    ],
    toolbox: {
      feature: {
        dataZoom: {},
        restore: {},
        saveAsImage: { name: "sea-level-comparison" },
      },
    },
    series: echartsSeries,
  };
}

export function renderChart(container: HTMLElement, series: ChartSeriesJson[]): void {
  const instance = echarts.init(container);
  instance.setOption(chartOptions(series));
}

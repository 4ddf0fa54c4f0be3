import init, { compute_routes, path_families, series } from "./pkg/qsym_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);
const SVG = "http://www.w3.org/2000/svg";
const COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

function status(el, ok, text) {
  el.className = ok ? "ok" : "bad";
  el.textContent = text;
}

function fillTable(table, rows) {
  table.replaceChildren();
  for (const [a, b] of rows) {
    const tr = table.insertRow();
    tr.insertCell().textContent = a;
    tr.insertCell().textContent = b;
  }
}

function runCompute() {
  try {
    const out = JSON.parse(compute_routes($("c-family").value, $("c-lambda").value, $("c-mu").value, num("c-k"), num("c-m")));
    status($("c-status"), out.agreed, out.agreed ? "all routes agree" : "routes disagree");
    fillTable($("c-table"), out.routes.map((r) => [r.method, r.poly]));
  } catch (e) {
    status($("c-status"), false, e.message ?? String(e));
    $("c-table").replaceChildren();
  }
}

let view = null;
let current = 0;

function el(name, attrs) {
  const e = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  return e;
}

function drawFamily() {
  const svg = $("p-svg");
  svg.replaceChildren();
  if (!view || view.families.length === 0) {
    $("p-index").textContent = "none";
    $("p-tableau").textContent = "";
    return;
  }
  const pad = 40;
  const w = Number(svg.getAttribute("width")) - 2 * pad;
  const h = Number(svg.getAttribute("height")) - 2 * pad;
  const sx = w / Math.max(view.xmax, 1);
  const sy = h / view.top2;
  const px = (x) => pad + x * sx;
  const py = (y2) => pad + h - y2 * sy;

  for (let x = 0; x <= view.xmax; x++) {
    svg.append(el("line", { x1: px(x), y1: py(0), x2: px(x), y2: py(view.top2), stroke: "#eee" }));
    const t = el("text", { x: px(x) - 3, y: py(0) + 16, "font-size": 11 });
    t.textContent = x;
    svg.append(t);
  }
  for (const { y2, letter } of view.heights) {
    if (y2 % 2 !== 0) continue;
    svg.append(el("line", { x1: px(0), y1: py(y2), x2: px(view.xmax), y2: py(y2), stroke: "#eee" }));
    const t = el("text", { x: 4, y: py(y2) + 4, "font-size": 11 });
    t.textContent = letter;
    svg.append(t);
  }

  const fam = view.families[current];
  fam.paths.forEach((p, i) => {
    const color = COLORS[i % COLORS.length];
    const pts = p.vertices.map(([x, y2]) => `${px(x)},${py(y2)}`).join(" ");
    svg.append(el("polyline", { points: pts, fill: "none", stroke: color, "stroke-width": 2.5 }));
    p.labels.forEach((lab, j) => {
      if (lab === null) return;
      const [x0, y0] = p.vertices[j];
      const [x1, y1] = p.vertices[j + 1];
      const t = el("text", { x: (px(x0) + px(x1)) / 2, y: (py(y0) + py(y1)) / 2 - 4, "font-size": 11, fill: color });
      t.textContent = lab;
      svg.append(t);
    });
    const [sx0, sy0] = p.vertices[0];
    svg.append(el("circle", { cx: px(sx0), cy: py(sy0), r: 3.5, fill: color }));
  });
  $("p-index").textContent = `${current + 1} / ${view.families.length}` + (view.total > view.families.length ? ` (of ${view.total})` : "");
  $("p-tableau").textContent = fam.tableau;
}

function runPaths() {
  try {
    view = JSON.parse(path_families($("p-lambda").value, $("p-mu").value, num("p-k"), num("p-m"), 500));
    current = 0;
    status($("p-status"), true, `${view.total} non-intersecting families`);
  } catch (e) {
    view = null;
    status($("p-status"), false, e.message ?? String(e));
  }
  drawFamily();
}

function step(d) {
  if (!view || view.families.length === 0) return;
  current = (current + d + view.families.length) % view.families.length;
  drawFamily();
}

function runSeries() {
  try {
    const out = JSON.parse(series(num("s-k"), num("s-m"), num("s-d")));
    status($("s-status"), out.matches, out.matches ? "matches the product expansion" : "mismatch with the product expansion");
    fillTable($("s-table"), out.coeffs.map((c, l) => [`z^${l}`, c]));
  } catch (e) {
    status($("s-status"), false, e.message ?? String(e));
  }
}

await init();
$("c-go").addEventListener("click", runCompute);
$("p-go").addEventListener("click", runPaths);
$("p-prev").addEventListener("click", () => step(-1));
$("p-next").addEventListener("click", () => step(1));
$("s-go").addEventListener("click", runSeries);
runCompute();
runPaths();
runSeries();

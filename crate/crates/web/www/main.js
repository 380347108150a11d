import init, { gc_summary, torus_index, solve_problem } from "./pkg/horo_web.js";

const $ = (id) => document.getElementById(id);

function show(out, fn) {
  out.classList.remove("error");
  try {
    out.textContent = fn();
  } catch (e) {
    out.classList.add("error");
    out.textContent = e.message ?? String(e);
  }
}

const COLORS = ["#1f77b4", "#d62728"];

function plot(svg, hulls) {
  const pts = hulls.flat().map((p) => p.map(Number));
  const xs = pts.map((p) => p[0]), ys = pts.map((p) => p[1]);
  const lo = Math.min(...xs, ...ys, 0) - 1, hi = Math.max(...xs, ...ys, 1) + 1;
  const scale = 280 / (hi - lo);
  const sx = (x) => (x - lo) * scale, sy = (y) => 280 - (y - lo) * scale;
  let body = "";
  for (let t = Math.ceil(lo); t <= hi; t++) {
    body += `<line x1="${sx(t)}" y1="0" x2="${sx(t)}" y2="280" stroke="#eee"/>`;
    body += `<line x1="0" y1="${sy(t)}" x2="280" y2="${sy(t)}" stroke="#eee"/>`;
  }
  hulls.forEach((hull, i) => {
    const vs = hull.map((p) => p.map(Number));
    // vertices arrive in lexicographic order; sort by angle for drawing
    const cx = vs.reduce((s, p) => s + p[0], 0) / vs.length, cy = vs.reduce((s, p) => s + p[1], 0) / vs.length;
    vs.sort((a, b) => Math.atan2(a[1] - cy, a[0] - cx) - Math.atan2(b[1] - cy, b[0] - cx));
    const path = vs.map((p) => `${sx(p[0])},${sy(p[1])}`).join(" ");
    body += `<polygon points="${path}" fill="${COLORS[i]}" fill-opacity="0.2" stroke="${COLORS[i]}" stroke-width="2"/>`;
    for (const p of vs) body += `<circle cx="${sx(p[0])}" cy="${sy(p[1])}" r="4" fill="${COLORS[i]}"/>`;
  });
  svg.innerHTML = body;
}

await init();

$("gc-run").onclick = () => show($("gc-out"), () => JSON.stringify(JSON.parse(gc_summary($("gc-weight").value)), null, 2));

$("t-run").onclick = () =>
  show($("t-out"), () => {
    const res = JSON.parse(torus_index($("t-first").value, $("t-second").value));
    plot($("t-plot"), res.hulls);
    return `${res.index} common roots\n\n${JSON.stringify(res.report, null, 2)}`;
  });

$("p-run").onclick = () => show($("p-out"), () => solve_problem($("p-text").value));

$("gc-run").click();
$("t-run").click();
$("p-run").click();

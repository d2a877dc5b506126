import init, { decompose, admissibility_map, dressing_orbit } from "./pkg/iwasawa_demo.js";

const $ = (id) => document.getElementById(id);
const num = (id) => parseFloat($(id).value);

function fmtMatrix(flat, n) {
  const rows = [];
  for (let i = 0; i < n; i++) {
    const cells = [];
    for (let j = 0; j < n; j++) {
      const re = flat[2 * (i * n + j)], im = flat[2 * (i * n + j) + 1];
      cells.push(`${re.toFixed(6).padStart(11)}${im < 0 ? "-" : "+"}${Math.abs(im).toFixed(6)}i`);
    }
    rows.push("  " + cells.join("  "));
  }
  return rows.join("\n");
}

function runDecompose() {
  const out = $("out");
  out.className = "";
  try {
    const doc = JSON.parse($("doc").value);
    const { p, q } = doc.signature;
    const flat = new Float64Array(doc.matrix.flat(2));
    const d = decompose(p, q, flat, $("method").value, num("tol"));
    const n = p + q;
    let text = `s =\n${fmtMatrix(d.s, n)}\n\nb =\n${fmtMatrix(d.b, n)}\n\n`;
    text += `a = [${Array.from(d.a).map((x) => x.toPrecision(12)).join(", ")}]\n`;
    text += `residual ‖g − s·b‖ = ${d.residual.toExponential(3)}`;
    if (!Number.isNaN(d.agreement)) text += `\ngauss vs gram-schmidt distance = ${d.agreement.toExponential(3)}`;
    out.textContent = text;
    d.free();
  } catch (e) {
    out.className = "err";
    out.textContent = String(e.message ?? e);
  }
}

let view = null;
let picked = { r: 2.0, n: 0.4 };

function toPixel(r, n) {
  const c = $("map");
  return [((r - view.rmin) / (view.rmax - view.rmin)) * c.width, (1 - n / view.nmax) * c.height];
}

function drawMap() {
  const c = $("map");
  view = { rmin: num("rmin"), rmax: num("rmax"), nmax: num("nmax") };
  const rgba = admissibility_map(c.width, c.height, view.rmin, view.rmax, view.nmax);
  const ctx = c.getContext("2d");
  ctx.putImageData(new ImageData(new Uint8ClampedArray(rgba), c.width, c.height), 0, 0);
  drawOrbit();
}

function drawOrbit() {
  const pts = dressing_orbit(picked.r, picked.n, 0, num("rot"), num("boost"), num("tmax"), 400);
  const ctx = $("map").getContext("2d");
  ctx.lineWidth = 2;
  ctx.strokeStyle = "#1d3557";
  ctx.beginPath();
  for (let k = 0; k < pts.length; k += 4) {
    const [x, y] = toPixel(pts[k], Math.hypot(pts[k + 1], pts[k + 2]));
    k === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y);
  }
  ctx.stroke();
  const [x0, y0] = toPixel(picked.r, picked.n);
  ctx.fillStyle = "#e63946";
  ctx.fillRect(x0 - 3, y0 - 3, 6, 6);
  let admissible = 0;
  for (let k = 3; k < pts.length; k += 4) admissible += pts[k];
  const steps = pts.length / 4;
  const last = pts.length - 4;
  $("orbit").textContent =
    `b = [[${picked.r.toFixed(4)}, ${picked.n.toFixed(4)}], [0, ${(1 / picked.r).toFixed(4)}]]\n` +
    `steps: ${steps}, admissible along orbit: ${admissible}/${steps}\n` +
    `end point: r′ = ${pts[last].toFixed(5)}, |n′| = ${Math.hypot(pts[last + 1], pts[last + 2]).toFixed(5)}`;
}

await init();
$("run").addEventListener("click", runDecompose);
$("draw").addEventListener("click", drawMap);
for (const id of ["rot", "boost", "tmax"]) $(id).addEventListener("change", drawMap);
$("map").addEventListener("click", (ev) => {
  const c = $("map");
  const rect = c.getBoundingClientRect();
  const fx = (ev.clientX - rect.left) / rect.width, fy = (ev.clientY - rect.top) / rect.height;
  picked = { r: view.rmin + fx * (view.rmax - view.rmin), n: (1 - fy) * view.nmax };
  drawMap();
});
$("map").addEventListener("mousemove", (ev) => {
  const rect = $("map").getBoundingClientRect();
  const r = view.rmin + ((ev.clientX - rect.left) / rect.width) * (view.rmax - view.rmin);
  const n = (1 - (ev.clientY - rect.top) / rect.height) * view.nmax;
  $("hover").textContent = `r = ${r.toFixed(3)}, |n| = ${n.toFixed(3)}, r² + r⁻² − |n|² = ${(r * r + 1 / (r * r) - n * n).toFixed(4)}`;
});
runDecompose();
drawMap();

import init, { explore_family, classify_matrix, probe_obstruction } from "./pkg/sp4_web.js";

const $ = (id) => document.getElementById(id);

// Display-only conversion of an exact literal to a JS number.
function approx(lit) {
  const [p, q] = lit.split("/");
  return Number(p) / (q === undefined ? 1 : Number(q));
}

function drawSpectrum(spectrum) {
  const c = $("plane");
  const g = c.getContext("2d");
  const w = c.width, h = c.height, scale = w / 6;
  g.clearRect(0, 0, w, h);
  g.strokeStyle = "#ccc";
  g.beginPath(); g.moveTo(0, h / 2); g.lineTo(w, h / 2); g.moveTo(w / 2, 0); g.lineTo(w / 2, h); g.stroke();
  g.strokeStyle = "#36c";
  g.beginPath(); g.arc(w / 2, h / 2, scale, 0, 2 * Math.PI); g.stroke();
  for (const z of spectrum) {
    const x = w / 2 + approx(z.re) * scale;
    const y = h / 2 - approx(z.im) * scale;
    g.fillStyle = "#b3261e";
    g.beginPath(); g.arc(x, y, 5, 0, 2 * Math.PI); g.fill();
  }
}

function renderMatrix(table, rows) {
  table.innerHTML = rows.map((r) => "<tr>" + r.map((x) => `<td>${x}</td>`).join("") + "</tr>").join("");
}

function updateFamily() {
  const eps = $("eps-text").value;
  try {
    const v = JSON.parse(explore_family(eps));
    const r = v.report;
    renderMatrix($("p-matrix"), v.matrix.rows);
    drawSpectrum(v.spectrum);
    const flag = (b) => `<span class="${b ? "ok" : "bad"}">${b}</span>`;
    $("family-summary").innerHTML =
      `tr = ${r.trace}, det(P − I) = ${r.det_minus_I}<br>` +
      `det(P − I) &gt; 0 and tr &lt; 4: ${flag(r.cond2)}<br>` +
      `class: <b>${r.spectral_class.tag}</b>, |λ|² = ${v.modulus_sq.join(", ")}<br>` +
      (r.splitting_verified === null
        ? `obstruction at e₃: ${r.obstruction_value}`
        : `invariant Lagrangian splitting: ${flag(r.splitting_verified)}`) +
      `<br>max-entry distance to P₀: ${r.distance_to_P0}`;
    $("family-poly").textContent = "det(λI − P) = " + v.char_poly;
  } catch (e) {
    $("family-summary").textContent = String(e);
  }
}

function setClassifyInput(rows) {
  $("classify-input").innerHTML = rows
    .map((r, i) => "<tr>" + r.map((x, j) => `<td><input id="c${i}${j}" value="${x}"></td>`).join("") + "</tr>")
    .join("");
}

function runClassify() {
  const rows = [0, 1, 2, 3].map((i) => [0, 1, 2, 3].map((j) => $(`c${i}${j}`).value.trim()));
  try {
    $("classify-out").textContent = JSON.stringify(JSON.parse(classify_matrix(JSON.stringify({ rows }))), null, 2);
  } catch (e) {
    $("classify-out").textContent = String(e);
  }
}

function runObstruction() {
  try {
    $("obs-out").textContent = JSON.stringify(JSON.parse(probe_obstruction($("obs-eps").value, $("obs-u").value)), null, 2);
  } catch (e) {
    $("obs-out").textContent = String(e);
  }
}

const P0 = [["1", "0", "1", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]];
const ROT = [["3/5", "0", "-4/5", "0"], ["0", "0", "0", "-1"], ["4/5", "0", "3/5", "0"], ["0", "1", "0", "0"]];

await init();
$("eps-slider").addEventListener("input", (e) => {
  const n = Number(e.target.value);
  $("eps-text").value = n % 100 === 0 ? String(n / 100) : `${n}/100`;
  updateFamily();
});
$("eps-text").addEventListener("change", updateFamily);
$("load-p0").addEventListener("click", () => setClassifyInput(P0));
$("load-rot").addEventListener("click", () => setClassifyInput(ROT));
$("classify-run").addEventListener("click", runClassify);
$("obs-run").addEventListener("click", runObstruction);
setClassifyInput(P0);
updateFamily();
runClassify();
runObstruction();

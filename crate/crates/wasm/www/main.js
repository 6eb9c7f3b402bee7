// Build the bindings first: wasm-pack build crates/wasm --target web --out-dir www/pkg
import init, { explore_power, decide_cyclic, x3hs_gadget } from "./pkg/cycletype_wasm.js";

const $ = (id) => document.getElementById(id);

function show(el, f) {
  el.classList.remove("error");
  try {
    return f();
  } catch (e) {
    el.classList.add("error");
    el.textContent = String(e);
  }
}

function runPower() {
  const out = $("pow-out");
  show(out, () => {
    const r = JSON.parse(explore_power($("pow-perm").value, $("pow-exp").value));
    out.textContent =
      `π      ${r.pi.cycles}\n       type ${r.pi.type.text}, order ${r.pi.type.order}\n` +
      `π^${r.power.exponent}  ${r.power.cycles}\n       type ${r.power.type.text}, order ${r.power.type.order}, ` +
      `${r.power.type.fixpoints} fixpoints`;
  });
}

function runDecide() {
  const out = $("dec-out");
  show(out, () => {
    const r = JSON.parse(decide_cyclic($("dec-pi").value, $("dec-rho").value));
    out.textContent = r.answer
      ? `YES  d = ${r.d}\nπ^d = ${r.power}\ntype ${r.rho_type}`
      : `NO   (${r.reason})\nct(π) = ${r.pi_type}\nct(ρ) = ${r.rho_type}`;
  });
}

function cell(tr, text, tag = "td") {
  const c = document.createElement(tag);
  c.textContent = text;
  tr.appendChild(c);
}

function table(head, rows) {
  const t = document.createElement("table");
  const h = t.insertRow();
  head.forEach((x) => cell(h, x, "th"));
  rows.forEach((r) => {
    const tr = t.insertRow();
    r.forEach((x) => cell(tr, x));
  });
  return t;
}

function runGadget() {
  const out = $("gad-out");
  out.replaceChildren();
  show(out, () => {
    const r = JSON.parse(x3hs_gadget(Number($("gad-n").value), $("gad-blocks").value, $("gad-set").value));
    const p = document.createElement("p");
    p.textContent = `degree N = ${r.n_total}; target cycle type ${r.target_type}`;
    out.appendChild(p);
    out.appendChild(
      table(
        ["block", "primes", "q", "r", "s", "t"],
        r.blocks.map((b) => [`{${b.elements.join(",")}}`, b.primes.join("·"), b.q, b.r, b.s.join(" "), b.t]),
      ),
    );
    out.appendChild(
      table(
        ["component", "degree", "ρ", "π₁", "π₂"],
        r.components.map((c) => [c.label, c.degree, c.rho ?? "", c.pi1, c.pi2]),
      ),
    );
    const c = r.candidate;
    if (c) {
      const pre = document.createElement("pre");
      if (!c.exact) {
        pre.textContent = `{${c.set.join(",")}} is not an exact hitting set`;
      } else {
        const lines = c.blocks.map((b) => `block ${b.block}: ${b.product === b.rho ? "matches" : "differs"}  ${b.product}`);
        pre.textContent =
          `witness x1 = ${c.x1}, x2 = ${c.x2}\nverified: ${c.verified}; extracted T = {${(c.extracted ?? []).join(",")}}\n` +
          lines.join("\n");
      }
      out.appendChild(pre);
    }
  });
}

await init();
$("pow-run").onclick = runPower;
$("dec-run").onclick = runDecide;
$("gad-run").onclick = runGadget;
runPower();
runDecide();


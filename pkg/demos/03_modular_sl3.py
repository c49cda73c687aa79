#!/usr/bin/env python3
"""The modular chain over SL3 at a prime p: Jantzen sums, radicals, Ext^2.

With lam = p*w1, mu = (p-2)*w1 + w2, gamma = (p-3)*w1:

  * gamma is in the closure of the lowest alcove, so V(gamma) is simple;
  * J(mu) = chi(gamma), so rad V(mu) = L(gamma);
  * J(lam) = chi(mu) - chi(gamma), so rad V(lam) = L(mu);
  * the connecting map then gives dim Ext^2(L(lam), L(gamma)) = 1,

and the module W = L(lam)^dual tensor L(gamma) that carries the resulting
non-split extension has dimension 3(p-1)(p-2)/2.
"""

import sys

from parahoric import (
    SimpleLedger,
    build_root_datum,
    dim,
    dual,
    ext2_chain,
    jantzen_sum,
    lowest_alcove_test,
    tensor,
)

p = int(sys.argv[1]) if len(sys.argv) > 1 else 5
a2 = build_root_datum("A2")
lam, mu, gamma = (p, 0), (p - 2, 1), (p - 3, 0)
print(f"p = {p}: lam={lam} mu={mu} gamma={gamma}")
print("gamma in lowest alcove:", lowest_alcove_test(a2, p, gamma))
print("J(mu)  =", dict(jantzen_sum(a2, p, mu).coeffs))
print("J(lam) =", dict(jantzen_sum(a2, p, lam).coeffs))

ledger = SimpleLedger(a2, p)
ext2 = ext2_chain(a2, p, lam, mu, gamma, ledger)
for w in (gamma, mu, lam):
    entry = ledger.entries[w]
    rad = dict(entry.radical) or "0"
    print(f"  ch L{w}: dim {dim(entry.char):4d}  provenance {entry.provenance:16s} "
          f"rad V = {rad}")
print("dim Ext^2(L(lam), L(gamma)) =", ext2)

w_module = tensor(dual(ledger.entries[lam].char), ledger.entries[gamma].char)
print(f"dim W = {dim(w_module)} (formula gives {3 * (p - 1) * (p - 2) // 2})")
print("=> a linear algebraic group with reductive quotient SL3, abelian")
print("   unipotent radical W, and no Levi decomposition exists at this p.")

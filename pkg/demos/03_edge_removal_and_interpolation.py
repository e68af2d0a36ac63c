"""Removing one edge can move gamma_wcon by any prescribed amount, yet the
spanning-tree values of a fixed graph always fill an interval.

Run:  python3 demos/03_edge_removal_and_interpolation.py
"""

from domlab.domination import SolverConfig, minimum_wcon_dominating
from domlab.gadgets import complete, cycle, edge_gap_gadget, random_unicyclic
from domlab.graph import remove_edge
from domlab.spanning import wcon_spectrum

cfg = SolverConfig()

print("prescribed shift k, before, after removing the special edge:")
for k in (-3, -1, 0, 1, 3):
    desc = edge_gap_gadget(k)
    before = minimum_wcon_dominating(desc.graph, cfg).value
    after = minimum_wcon_dominating(
        remove_edge(desc.graph, *desc.special_edge), cfg
    ).value
    print(f"  k={k:+d}: {before} -> {after} (shift {after - before:+d})")
    assert after - before == k

print("\nspanning-tree interpolation (sorted distinct values, interval?):")
for name, g in (
    ("K_5", complete(5)),
    ("C_8", cycle(8)),
    ("random unicyclic", random_unicyclic(12, 7)),
):
    rep = wcon_spectrum(g)
    print(f"  {name:<17} {sorted(set(rep.values))}  interval={rep.is_interval}"
          f"  over {rep.tree_count} trees")

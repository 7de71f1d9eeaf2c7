"""
Complexity on H-free graphs
===========================

For each small pattern H, the six blocker problems (three parameters,
two operations) are either polynomial or hard on H-free graphs, with a
single case still open.
"""

from blockers.recognize import classify, named_graph

patterns = ["P1", "P2", "P3", "P4", "P5", "3P1", "2P2", "P1+P3", "paw", "C3", "C4", "C5",
            "K1,3", "C3+P1"]
columns = [(pi, kind) for kind in ("delete", "contract") for pi in ("alpha", "omega", "chi")]
short = {"polynomial": "P", "hard": "hard", "open": "open"}

print(f"{'H':8s}" + "".join(f"{pi[:3] + '-' + kind[:3]:<10s}" for pi, kind in columns))
for name in patterns:
    h = named_graph(name)
    cells = [short[classify(h, pi, kind).verdict] for pi, kind in columns]
    print(f"{name:8s}" + "".join(f"{c:<10s}" for c in cells))

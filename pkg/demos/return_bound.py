# How many times a run comes back to the initial cell.
from pathlib import Path

from guesstape import MemoryContent, run
from guesstape.io import parse_spec

model, spec = parse_spec((Path(__file__).parent / "specs" / "many_returns.json").read_text())
for n in range(1, 9):
    outcome, summary = run(spec, model, MemoryContent("0"), "a" * n, 1000)
    print(f"input a^{n}: {outcome}, returns={summary.return_moves}, "
          f"states={len(spec.states)}, surface configurations={spec.surface_count(n)}")

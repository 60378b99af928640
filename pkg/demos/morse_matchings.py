"""Run the preset element matchings and read off the homotopy type from the
surviving critical cells."""

from cutcomplex import element_matching_sequence, family, morse_report, preset_schedule, total_cut_complex
from cutcomplex.graph import bits

cases = [
    ("prism:3", 2, ("prism", 3)),
    ("grid:3,3", 2, ("grid", 3, 3)),
    ("cycle:10", 3, ("cycle", 10, 3)),
    ("wn:9", 2, ("squared_cycle", 9)),
]
for spec, k, preset in cases:
    delta = total_cut_complex(family(spec), k)
    schedule = preset_schedule(*preset)
    matching = element_matching_sequence(delta, schedule)
    rep = morse_report(delta, matching)
    print(f"{spec} k={k}: schedule {schedule}")
    print(f"  {rep.describe()}")
    for cell in matching.critical:
        if cell:
            print(f"  critical {bits(cell)}")

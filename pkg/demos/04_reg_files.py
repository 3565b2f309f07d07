# Writing and filtering Reg<n>.txt files, and DOT output for drawing.
#
#     python demos/04_reg_files.py
from pathlib import Path
import tempfile

from regdigraph import enumerate_unlabeled
from regdigraph.formats import count_loopless, count_v_prefix, export_dot, read_reg, write_reg

out = Path(tempfile.mkdtemp())
for n in range(1, 7):
    (out / f"Reg{n}.txt").write_text(write_reg(enumerate_unlabeled(n)))
print("wrote", sorted(p.name for p in out.iterdir()), "to", out)

text = (out / "Reg3.txt").read_text()
print(text)

# The second line of each record starts "V<multiarcs> <loops>", so simple
# prefix filters pick out the subfamilies.
for n in range(2, 7):
    t = (out / f"Reg{n}.txt").read_text()
    print(n, "no multiarcs:", count_v_prefix(t, "V0"),
          " simple and loopless:", count_v_prefix(t, "V0 0"),
          " loopless:", count_loopless(t))

# Reading a file recomputes and cross-checks every V line.
records = read_reg(text)
print(export_dot(records[0].graph, "first"))

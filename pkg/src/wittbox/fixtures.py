"""Bundled instance files with published reference values.

These are the three concrete worked instances whose counts are pinned by the
acceptance suite: 30/ord 1, 32/ord 5, and 30 with the closeness hypothesis
violated.
"""

EXAMPLE_41 = """\
[ring]
p = 2
h = 1

[problem]
n = 4
m = 2

[system]
f1 = x1 + 3*x2 + 5*x3 + 6*x4 mod p^3

[box]
g[2][1] = x[0][1]*x[1][1]*x[0][2]*x[1][4]
"""

EXAMPLE_42 = """\
[ring]
p = 2
h = 1

[problem]
n = 4
m = 2

[system]
f1 = x1 + 2*x2 + 2*x3 + 4*x4 mod p^3

[box]
g[2][1] = x[0][1]*x[1][1]*x[0][2]*x[1][4]
g[2][2] = x[0][1]*x[1][2]*x[0][3]*x[0][4]
"""

EXAMPLE_43 = """\
[ring]
p = 2
h = 1

[problem]
n = 4
m = 2

[system]
f1 = x1 + 3*x2 + 4*x3 + 7*x4 mod p^3

[box]
g[2][1] = x[0][1]*x[1][1]*x[0][2]*x[1][2]*x[0][3]
g[2][2] = x[0][1]*x[1][2]*x[0][3]*x[0][4]
"""

# (name, text, expected cardinality, expected ord_p or None, closeness at 3)
PAPER_EXAMPLES = (
    ("example41", EXAMPLE_41, 30, 1, True),
    ("example42", EXAMPLE_42, 32, 5, True),
    ("example43", EXAMPLE_43, 30, 1, False),
)

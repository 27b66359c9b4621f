"""Reference values, rounded as originally tabulated, shared by several test modules."""

# p%, c', m', Y', f1', Y1', Y2'+Y3', %Y', %Y1', %(Y2'+Y3')
REDISTRIBUTION_ROWS = [
    (0, 0.690, 3.23, 281, 0.22, 62, 219, 0.0, 0.0, 0.0),
    (2, 0.695, 3.28, 286, 0.24, 67, 218, 1.8, 9.0, -0.3),
    (4, 0.701, 3.34, 291, 0.25, 73, 218, 3.6, 18.3, -0.5),
    (6, 0.706, 3.40, 296, 0.27, 79, 217, 5.5, 28.0, -0.8),
    (8, 0.712, 3.47, 302, 0.28, 85, 216, 7.5, 38.0, -1.1),
    (10, 0.717, 3.53, 307, 0.30, 92, 216, 9.5, 48.4, -1.4),
    (12, 0.722, 3.60, 313, 0.31, 98, 215, 11.7, 59.2, -1.7),
    (14, 0.728, 3.67, 320, 0.33, 105, 214, 13.9, 70.4, -2.1),
    (16, 0.733, 3.75, 326, 0.34, 112, 214, 16.2, 82.1, -2.4),
    (18, 0.739, 3.83, 333, 0.36, 120, 213, 18.6, 94.3, -2.8),
    (20, 0.744, 3.91, 340, 0.38, 128, 212, 21.1, 107.0, -3.1),
]

REDISTRIBUTION_TOL = {"c": 0.0005, "m": 0.01, "level": 1.0, "pct": 0.1, "f1": 0.005}

REDISTRIBUTION_INPUTS = {"f1": 0.22, "c1": 0.96, "c": 0.69, "Y": 281}

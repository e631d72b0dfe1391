"""Reference matrices of the worked (3, 2) example over Z/6, kept separate from
the copy embedded in the package so that the tests do not grade themselves."""

# encoder over Z/6, entries as ascending coefficient lists
G = [[[3, 1], [5]],
     [[1, 0, 3], [2, -2]],
     [[-1, 4, -1], [-3, 3]]]
G_MINORS = {(1, 2, 1), (2, 4, 2), (5, 5, 1, 1)}  # z^2+2z+1, 2z^2+4z+2, z^3+z^2+5z+5

G1 = [[[1, 1], [1]],
      [[1, 0, 1], []],
      [[1, 0, 1], [1, 1]]]
G2 = [[[0, 1], [-1]],
      [[1], [-1, 1]],
      [[-1, 1, -1], []]]

K1 = [[1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 1, 1]]
L1 = [[0, 1, 0], [1, 0, 1], [1, 0, 0], [1, 0, 1]]
M1 = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]
K2 = [[-1, 0, 0], [-1, 0, 0], [0, 0, -1], [-1, 1, 0]]
L2 = [[0, 1, 0], [0, 0, 1], [-1, 0, 1], [1, 0, 0]]
M2 = M1

A1 = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
B1 = [[0, 0], [1, 0], [1, 1]]
C1 = [[1, 1, 1]]
D1 = [[0, 0]]
A2 = [[0, 1, 0], [-1, 1, 0], [-1, 0, 1]]
B2 = [[0, 0], [0, -1], [1, 0]]
C2 = [[0, 1, -1]]
D2 = [[0, 0]]

A = [[0, 1, 0], [5, 4, 0], [2, 0, 1]]
B = [[0, 0], [3, 2], [1, 3]]
C = [[3, 1, 5]]
D = [[0, 0]]

K6 = [[-1, 0, 0], [0, -1, 0], [0, 0, -1], [0, 0, 0]]
L6 = [[0, 1, 0], [5, 4, 0], [2, 0, 1], [3, 1, 5]]
M6 = [[0, 0, 0], [0, 3, 2], [0, 1, 3], [-1, 0, 0]]

PHI1 = [[0, 0, 1, 0, 0, 0], [1, 0, 0, 0, 1, 0], [1, 1, 1, 1, 1, 1]]

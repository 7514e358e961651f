"""Independent symbolic derivation of the frozen oracle values used by the
C++ unit tests in tests/unit. Run with python3; prints the
values at 17 significant digits. Nothing here imports the library."""

import sympy as sp

x1, x2, x3 = X = sp.symbols("x1 x2 x3", real=True)
N = 3


def christoffel(g, coords):
    ginv = g.inv()
    n = len(coords)
    return [[[sp.Rational(1, 2) * sum(ginv[k, l] * (sp.diff(g[l, i], coords[j]) + sp.diff(g[l, j], coords[i])
                                                   - sp.diff(g[i, j], coords[l])) for l in range(n))
              for j in range(n)] for i in range(n)] for k in range(n)]


def christoffel_at(g, coords, point):
    """Christoffel symbols at a point, from exact first derivatives."""
    sub = dict(zip(coords, point))
    n = len(coords)
    gv = g.subs(sub).evalf(30)
    dg = [g.diff(c).subs(sub).evalf(30) for c in coords]
    ginv = gv.inv()
    return [[[sum(ginv[k, l] * (dg[j][l, i] + dg[i][l, j] - dg[l][i, j]) for l in range(n)) / 2
              for j in range(n)] for i in range(n)] for k in range(n)]


def ricci_at(g, coords, point):
    """Ricci tensor with R^i_{jkl} = d_k G^i_{lj} - d_l G^i_{kj} + ..., Ric_{jl} = R^k_{jkl}."""
    sub = dict(zip(coords, point))
    n = len(coords)
    gv = g.subs(sub).evalf(30)
    ginv = gv.inv()
    dg = [[g.diff(c) for c in coords]]
    d1 = [g.diff(c).subs(sub).evalf(30) for c in coords]
    d2 = [[g.diff(a).diff(b).subs(sub).evalf(30) for b in coords] for a in coords]
    # d_m ginv = -ginv dg_m ginv
    dginv = [-ginv * d1[m] * ginv for m in range(n)]
    gam = [[[sum(ginv[k, l] * (d1[j][l, i] + d1[i][l, j] - d1[l][i, j]) for l in range(n)) / 2
             for j in range(n)] for i in range(n)] for k in range(n)]
    dgam = [[[[sum(dginv[m][k, l] * (d1[j][l, i] + d1[i][l, j] - d1[l][i, j])
                   + ginv[k, l] * (d2[m][j][l, i] + d2[m][i][l, j] - d2[m][l][i, j]) for l in range(n)) / 2
               for j in range(n)] for i in range(n)] for k in range(n)] for m in range(n)]
    ric = sp.zeros(n, n)
    for j in range(n):
        for l in range(n):
            s = 0
            for k in range(n):
                s += dgam[k][k][l][j] - dgam[l][k][k][j]
                for p in range(n):
                    s += gam[k][k][p] * gam[p][l][j] - gam[k][l][p] * gam[p][k][j]
            ric[j, l] = s
    return gv, ginv, ric, gam


def show(name, value):
    print(f"{name} = {sp.N(value, 17)}")


# Hyperbolic metric in geodesic polar coordinates: Gamma^rho_{theta theta} at rho = 1.
rho, th, ph = sp.symbols("rho theta phi", positive=True)
bpolar = sp.diag(1, sp.sinh(rho) ** 2, sp.sinh(rho) ** 2 * sp.sin(th) ** 2)
gam = christoffel(bpolar, [rho, th, ph])
show("b_polar Gamma^rho_thth(rho=1)", gam[0][1][1].subs(rho, 1))
show("b_polar Gamma^rho_phph(rho=1, theta=0.7)", gam[0][2][2].subs({rho: 1, th: 0.7}))
show("b_polar Gamma^th_rhoth(rho=1)", gam[1][0][1].subs(rho, 1))

# Hyperbolic metric in the Minkowski chart y.
Y = sp.Matrix(X)
bmink = sp.eye(3) - Y * Y.T / (1 + (Y.T * Y)[0])
pt = (sp.Rational(3, 10), -sp.Rational(1, 5), sp.Rational(1, 2))
gb = christoffel_at(bmink, X, pt)
for k, i, j in [(0, 0, 0), (0, 1, 1), (2, 0, 2), (1, 1, 2)]:
    show(f"b_mink Gamma^{k}_{i}{j}(0.3,-0.2,0.5)", gb[k][i][j])

# Spatial Schwarzschild, n = 3, m = 1.
r = sp.sqrt(x1 ** 2 + x2 ** 2 + x3 ** 2)
u = 1 + sp.Rational(1, 2) / r
gs = u ** 4 * sp.eye(3)
gsch = christoffel_at(gs, X, (2, 0, 0))
for k, i, j in [(0, 0, 0), (0, 1, 1), (1, 0, 1)]:
    show(f"schw Gamma^{k}_{i}{j}(2,0,0)", gsch[k][i][j])
_, ginv_s, ric_s, _ = ricci_at(gs, X, (sp.Rational(13, 10), -sp.Rational(7, 10), sp.Rational(9, 10)))
show("schw scalar(1.3,-0.7,0.9)", sum(ginv_s[i, j] * ric_s[i, j] for i in range(3) for j in range(3)))
show("schw g11(2,0,0)", gs[0, 0].subs({x1: 2, x2: 0, x3: 0}))

# Charge one-form of e = (u^4 - 1) delta with w = 1 at (10, 0, 0): div e - d tr e.
f = u ** 4 - 1
e = f * sp.eye(3)
U = [sum(sp.diff(e[i, j], X[i]) for i in range(3)) - sp.diff(3 * f, X[j]) for j in range(3)]
show("schw U_1(10,0,0)", U[0].subs({x1: 10, x2: 0, x3: 0}))

# Finite-radius ADM flux of Schwarzschild on a centered hemisphere: integrand is
# constant, c_3 (1 - n) f'(r) (omega/2) r^2 with c_3 = 1/(4 omega).
R, m = sp.symbols("R m", positive=True)
for n in (3, 4):
    un = 1 + m / (2 * R ** (n - 2))
    fn = un ** sp.Rational(4, n - 2) - 1
    mass_r = sp.simplify(-(sp.diff(fn, R)) * R ** (n - 1) / 4)
    print(f"schw mass_adm(r), n={n}: {sp.factor(mass_r)}")
    show(f"  n={n} m=1 r=4", mass_r.subs({m: 1, R: 4}))
show("schw hemisphere g-area r=4", 2 * sp.pi * 16 * (1 + sp.Rational(1, 8)) ** 4)

# Generic perturbation (n = 3, m = 1, k = 1/2, A = 1/20, tau = 4/5, profile 0):
# g = Phi^* (u^4 delta), Phi = x + A (1 + |x|^2)^{-tau/2} M x,
# u = 1 + m / (2 r) + k x3 (1 + r^2)^{-3/2}.
A, tau, k = sp.Rational(1, 20), sp.Rational(4, 5), sp.Rational(1, 2)
M = sp.zeros(3, 3)
for i in range(2):
    for j in range(3):
        M[i, j] = sp.sin(sp.Rational(13, 10) + sp.Rational(7, 10) * i + sp.Rational(19, 10) * j)
M[2, 2] = sp.Rational(1, 2)
w = 1 + (Y.T * Y)[0]
Phi = Y + A * w ** (-tau / 2) * M * Y
rp = sp.sqrt((Phi.T * Phi)[0])
up = 1 + sp.Rational(1, 2) / rp + k * Phi[2] * (1 + rp ** 2) ** sp.Rational(-3, 2)
D = Phi.jacobian(X)
ggen = up ** 4 * (D.T * D)

p10 = (6, -5, sp.sqrt(100 - 61))  # r = 10
gv, ginv, ric, _ = ricci_at(ggen, X, p10)
scal = sum(ginv[i, j] * ric[i, j] for i in range(3) for j in range(3))
E = ric - scal / 2 * gv
print("generic E at (6,-5,sqrt(39)):")
for i in range(3):
    for j in range(i, 3):
        show(f"  E[{i}][{j}]", E[i, j])

# Newton tensor on Sigma at (6.4, -4.8, 0) (r = 8), outward normal:
# Pi_ab = Gamma^3_ab / sqrt(g^33), J = Pi - H h on the tangent block.
p8 = (sp.Rational(32, 5), -sp.Rational(24, 5), 0)
gam8 = christoffel_at(ggen, X, p8)
gv8 = ggen.subs(dict(zip(X, p8))).evalf(30)
ginv8 = gv8.inv()
Pi = sp.Matrix(2, 2, lambda a, b: gam8[2][a][b] / sp.sqrt(ginv8[2, 2]))
h = gv8[:2, :2]
H = sum((h.inv())[a, b] * Pi[a, b] for a in range(2) for b in range(2))
J = Pi - H * h
print("generic J at (6.4,-4.8,0):")
for a in range(2):
    for b in range(a, 2):
        show(f"  J[{a}][{b}]", J[a, b])
show("  H", H)

# AdS-Schwarzschild, n = 3, charge flux with W_0 = sqrt(1+s^2) on the
# hemisphere |y| = s. The integrand is rotationally symmetric and the corner
# term vanishes (e is radial, eta is tangent to the sphere on the corner).
s = sp.symbols("s", positive=True)
mm = 1
V = 1 + (Y.T * Y)[0] - 2 * mm / sp.sqrt((Y.T * Y)[0])
yy = Y * Y.T / (Y.T * Y)[0]
gads = sp.eye(3) + (1 / V - 1) * yy
eads = gads - bmink
W = sp.sqrt(1 + (Y.T * Y)[0])
q = (s / sp.sqrt(2), 0, s / sp.sqrt(2))
sub = dict(zip(X, q))
binv = bmink.inv()
gb_ = christoffel(bmink, list(X))
# nabla_k e_ij
def nab_e(kk, i, j):
    return sp.diff(eads[i, j], X[kk]) - sum(gb_[l][kk][i] * eads[l, j] + gb_[l][kk][j] * eads[i, l] for l in range(3))
div_e = [sum(binv[i, kk] * nab_e(kk, i, j) for i in range(3) for kk in range(3)) for j in range(3)]
tr_e = sum(binv[i, j] * eads[i, j] for i in range(3) for j in range(3))
dW = [sp.diff(W, c) for c in X]
gradW = binv * sp.Matrix(dW)
Uads = [W * (div_e[j] - sp.diff(tr_e, X[j])) - sum(eads[i, j] * gradW[i] for i in range(3)) + tr_e * dW[j]
        for j in range(3)]
Uq = sp.Matrix([sp.simplify(c.subs(sub)) for c in Uads])
mu = sp.Matrix(q) / s * sp.sqrt(1 + s ** 2)  # b-unit radial vector
area = 2 * sp.pi * s ** 2  # b restricted to |y| = s is the round metric
c3 = 1 / (2 * 2 * 4 * sp.pi)
Mrho = sp.simplify(c3 * (Uq.T * mu)[0] * area)
print("AdS charge M(s) =", sp.factor(Mrho))
show("  rho=3", Mrho.subs(s, sp.sinh(3)))
show("  rho=4", Mrho.subs(s, sp.sinh(4)))

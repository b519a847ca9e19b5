"""Independent high-precision oracle for frozen test values (mpmath)."""
from mpmath import mp, mpf, mpc, exp, log, pi, sqrt, cos, quad, inf, fsum

mp.dps = 40


def adjoint_det(l, th):
    return 1 - 2 * cos(2 * th) * exp(-l) + exp(-2 * l)


def selberg_double_sum(prims, k, s, depth=80):
    # log Z(s, sigma_k) from the Euler product over symmetric powers of Ad on nbar.
    total = mpc(0)
    for l, th in prims:
        for p in range(depth):
            for a in range(p + 1):
                phase = exp(1j * (k * th + 2 * (2 * a - p) * th))
                total += log(1 - phase * exp(-(s + 1 + p) * l))
    return total


def gauss_transform(l, s):
    f = lambda t: exp(-t * s * s) * exp(-l * l / (4 * t)) / sqrt(4 * pi * t)
    return quad(f, [0, l / (2 * s), inf])


print("adjoint_det(1,0)", adjoint_det(1, 0))
print("adjoint_det(1,pi/2)", adjoint_det(1, pi / 2))
print("lefschetz_L(0,1,0)", exp(-1) / adjoint_det(1, 0))
print("log_ruelle one class k=0 s=3", log(1 - exp(-3)))
print("log_ruelle one class th=pi/2 k=2 s=3", log(1 + exp(-3)))
print("log_selberg one class k=0 s=3", selberg_double_sum([(mpf(1), mpf(0))], 0, 3))
print("log_selberg (1,0.7) k=1 s=3+1i", selberg_double_sum([(mpf(1), mpf('0.7'))], 1, mpc(3, 1)))
print("identity_term k=0 t=1 vol=1", sqrt(pi) / (4 * pi**2))
print("torsion even one class m=3 v=1", 6 / pi - log(1 - exp(-3)))
print("torsion odd one class th=pi m=2 v=1", 5 / pi - log(1 + exp(mpf(-5) / 2)))
C1 = 1 / (1 - exp(-1))
print("C1", C1, "bound", C1 * -log(1 - exp(-3)))
print("gauss l=1 s=2", gauss_transform(1, 2), exp(-2) / 4)
print("plancherel(2,0)", 1 / (4 * pi**2))
print("ruelle_modulus_negated single class vol=1 k=4 s=3 th=0.4",
      exp(-12 / pi) * abs(1 - exp(4j * mpf('0.4')) * exp(-3)))
# heat_geometric, one class (1,0), k=0, t=1 (powers n=1..3 dominate)
hyp = fsum([2 * exp(-n) / adjoint_det(n, 0) * exp(-mpf(n)**2 / 4) / sqrt(4 * pi) for n in range(1, 60)])
print("heat hyperbolic one class k=0 t=1", hyp)

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lieembed.algebra import (
    AlgebraPresentation,
    Generator,
    PresentationError,
    TermLimitError,
    adjoin_central_root,
    commutator,
    normal_order,
    substitute,
)
from lieembed.algebra.kernel import CompiledKernel, PythonKernel, select_kernel
from lieembed.presets import build_poincare, build_so, quadratic_casimir


def heisenberg(kernel_class=None, max_terms=10**6):
    # z is central but comes first: bracket results may not use the central tail
    gens = [Generator("z"), Generator("x"), Generator("y")]
    return AlgebraPresentation(gens, {("y", "x"): {"z": -1}}, name="heis",
                               kernel_class=kernel_class, max_terms=max_terms)


def test_heisenberg_reordering():
    a = heisenberg()
    x, y, z = (a.gen(n) for n in "xyz")
    assert y * x == x * y - z
    # y x^2 = x^2 y - 2 x z
    assert y * x * x == x * x * y - z * x * 2
    assert commutator(x, y) == z


def test_normal_order_raw_words():
    a = heisenberg()
    raw = [(1, ["y", "x"]), (Fraction(1, 2), ["z"])]
    assert normal_order(raw, a) == a.word("x", "y") - a.gen("z") * Fraction(1, 2)
    assert a.word("y", "x") == a.word("x", "y") - a.gen("z")
    with pytest.raises(ValueError):
        normal_order(raw)


def test_jacobi_violation_is_rejected():
    gens = [Generator("a"), Generator("b"), Generator("c")]
    bad = {("a", "b"): {"c": 1}, ("b", "c"): {"a": 1}, ("c", "a"): {"a": 1}}
    with pytest.raises(PresentationError):
        AlgebraPresentation(gens, bad)


def test_antisymmetry_is_checked():
    gens = [Generator("a"), Generator("b")]
    with pytest.raises(PresentationError):
        AlgebraPresentation(gens, {("a", "b"): {"a": 1}, ("b", "a"): {"a": 1}})


def test_central_root_rewrites_square():
    so = build_so(0, 2)
    alg = so.algebra
    q2 = quadratic_casimir(so)
    ext = adjoin_central_root(alg, "Y", q2)
    y = ext.gen("Y")
    assert y * y == substitute({g.name: ext.gen(g.name) for g in alg.generators}, q2, ext)
    assert commutator(y, ext.gen("L01")).is_zero()


def test_non_central_root_is_rejected():
    alg = build_so(0, 2).algebra
    with pytest.raises(PresentationError):
        adjoin_central_root(alg, "Y", alg.gen("L01"))


def test_term_guard():
    alg = build_poincare(0, 3, max_terms=50).algebra
    big = sum((alg.gen(g.name) for g in alg.generators), alg.zero())
    with pytest.raises(TermLimitError):
        big ** 4


def test_select_kernel():
    assert select_kernel("python") is PythonKernel
    with pytest.raises(ValueError):
        select_kernel("fortran")


poincare_words = st.lists(st.sampled_from(["P0", "P1", "P2", "P3", "L01", "L02", "L03",
                                           "L12", "L13", "L23"]), min_size=1, max_size=5)


@given(poincare_words, poincare_words, poincare_words)
def test_product_is_associative(u, v, w):
    alg = build_poincare(1, 2).algebra
    a, b, c = alg.word(*u), alg.word(*v), alg.word(*w)
    assert (a * b) * c == a * (b * c)


@given(poincare_words)
def test_normal_form_is_sorted(word):
    alg = build_poincare(0, 3).algebra
    poly = alg.word(*word)
    # every monomial is an exponent vector, and the top-degree part is the sorted word
    top = max(sum(m) for m in poly.monomials())
    assert top == len(word)
    sorted_mono = [0] * alg.ngens
    for g in word:
        sorted_mono[alg.index(g)] += 1
    assert poly.coefficient(tuple(sorted_mono)) == 1


@pytest.mark.skipif(CompiledKernel is None, reason="compiled kernel not built")
@given(poincare_words, poincare_words)
def test_backends_agree(u, v):
    results = []
    for cls in (PythonKernel, CompiledKernel):
        alg = build_poincare(1, 3, kernel_class=cls).algebra
        results.append((alg.word(*u) * alg.word(*v)).terms())
    assert results[0] == results[1]


@pytest.mark.skipif(CompiledKernel is None, reason="compiled kernel not built")
def test_backends_agree_with_fractions_and_roots():
    from lieembed.embedding import build_deformed, compute_casimir_c2
    out = []
    for cls in (PythonKernel, CompiledKernel):
        ctx = build_deformed(0, 3, -1, kernel_class=cls)
        c, r = compute_casimir_c2(ctx)
        out.append((c.numerator.terms() if hasattr(c, "numerator") else c.terms(), r.terms()))
    assert out[0] == out[1]


def test_substitute_is_a_homomorphism():
    src = build_so(0, 2).algebra
    tgt = build_so(0, 2).algebra
    # identity map
    mapping = {g.name: tgt.gen(g.name) for g in src.generators}
    x = src.word("L12", "L01", "L02")
    assert substitute(mapping, x, tgt) == tgt.word("L12", "L01", "L02")


def _backend_in_subprocess(code, env_extra=None):
    import os
    import subprocess
    import sys
    env = dict(os.environ, **(env_extra or {}))
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env=env, check=True)
    return out.stdout.strip()


def test_environment_forces_python_backend():
    code = "from lieembed.algebra import BACKEND; print(BACKEND)"
    assert _backend_in_subprocess(code, {"LIEEMBED_KERNEL": "python"}) == "python"


def test_missing_extension_falls_back():
    code = ("import sys; sys.modules['lieembed.algebra._kernel'] = None\n"
            "from lieembed.algebra.kernel import BACKEND, CompiledKernel\n"
            "print(BACKEND, CompiledKernel)")
    assert _backend_in_subprocess(code, {"LIEEMBED_KERNEL": "auto"}) == "python None"

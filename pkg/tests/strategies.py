from hypothesis import strategies as st

from ajcable.laurent import LaurentPoly1, LaurentPoly2
from ajcable.qtorus import QTorusOperator

coef = st.integers(min_value=-50, max_value=50)


def laurent1(max_terms=8, lo=-12, hi=12, var="t"):
    return st.dictionaries(st.integers(lo, hi), coef, max_size=max_terms).map(lambda d: LaurentPoly1(d, var))


def nonzero_laurent1(**kw):
    return laurent1(**kw).filter(lambda p: not p.is_zero())


def laurent2(max_terms=6, lo=-6, hi=6):
    key = st.tuples(st.integers(lo, hi), st.integers(-4, 4))
    return st.dictionaries(key, coef, max_size=max_terms).map(LaurentPoly2)


def operators(max_k=2):
    return st.dictionaries(st.integers(-max_k, max_k), laurent2(max_terms=3), max_size=3).map(QTorusOperator)

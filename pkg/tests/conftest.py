from fractions import Fraction

from hypothesis import strategies as st

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_small = small_rationals.filter(lambda q: q != 0)


def series_strategy(order: int, invertible: bool = False):
    head = nonzero_small if invertible else small_rationals
    return st.tuples(head, st.lists(small_rationals, min_size=order, max_size=order)).map(
        lambda t: [t[0], *t[1]]
    )


F = Fraction

"""Reduce a few Leibniz algebras to their Lie quotients and print what happens."""

from leibniz_lm.corpus import leibniz2, leibniz_corpus, nonabelian2
from leibniz_lm.exactlin import QQ
from leibniz_lm.leibniz import check_leibniz, check_leibniz_morphism, check_lie, reduce, tensor_square


def show(name, g):
    red = reduce(g)
    morph = check_leibniz_morphism(red.pi, g, red.lie)
    print(f"{name:>24}: dim {g.dim} -> {red.lie.dim}, squares ideal dim {red.ideal.dim}, "
          f"lie? {check_lie(red.lie).passed}, projection ok? {morph.passed}")


g = leibniz2(QQ)
print(check_lie(g).verdict, check_lie(g).violations)  # [e1, e1] = e0 is not antisymmetric
for name, algebra in sorted(leibniz_corpus(QQ).items()):
    show(name, algebra)

# L (x) L is Leibniz but never Lie once L is nonabelian
sq = tensor_square(nonabelian2(QQ))
print("tensor square:", check_leibniz(sq).verdict, "| lie:", check_lie(sq).verdict)
show("tensor square", sq)

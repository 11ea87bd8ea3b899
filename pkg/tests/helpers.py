from gradedwander import Grading, ModuleVector, Polynomial, PresentedModule, parse_expression

STD2 = Grading([1, 1])


def P(text, variables=("x", "y")):
    return parse_expression(text, list(variables))


def V(text, grading=STD2, variables=("x", "y")):
    return ModuleVector.from_polynomial(P(text, variables), grading)


def ideal(*texts, weights=(1, 1), variables=("x", "y")):
    return PresentedModule.ideal([P(t, variables) for t in texts], Grading(weights))


def as_dict(poly):
    return dict(poly.items())

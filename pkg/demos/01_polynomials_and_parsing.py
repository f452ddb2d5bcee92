# Exact polynomial arithmetic over GF(p): everything downstream is built on
# the immutable Polynomial type and the strict expression grammar
#   expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
#   factor := INT | VAR | '(' expr ')' | factor '^' INT

from fthresh import QuotientRing

ring = QuotientRing(2, ["x", "y", "z", "w"])

f = ring.parse("x*y - z^2*w")
print("parsed over GF(2):", f)            # -1 is 1 mod 2, terms in grevlex order

# coefficients reduce mod p at parse time
mod3 = QuotientRing(3, ["x"])
print("3*x + 3 over GF(3):", mod3.parse("3*x + 3"))

# the freshman's dream: (x+y)^2 = x^2 + y^2 in characteristic 2
print("(x+y)^2 =", ring.parse("(x+y)^2"))

# the Frobenius map f -> f^(p^e) acts termwise in characteristic p
g = ring.parse("x + y*z")
print("g          =", g)
print("g^(2^1)    =", g.frobenius(1))
print("g^(2^2)    =", g.frobenius(2))
assert g.frobenius(1) == g * g

# quotient presentations R = S/L carry their relations with them; the Krull
# dimension comes from independent variable sets modulo the lead terms of L
blowup = QuotientRing(2, ["x", "y", "z", "w"], ["x*y - z^2*w"])
print("R =", blowup)
print("dim R =", blowup.dimension)

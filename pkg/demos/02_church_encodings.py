"""Church encodings: booleans, numerals, and multiplication.

Run with: python demos/02_church_encodings.py
"""

from lambda_forge import (
    FALSE,
    TRUE,
    And,
    FreeVar,
    Not,
    Or,
    alpha_equal,
    church_bool,
    church_mult,
    church_numeral,
    encode_bool_expr,
    eval_bool_expr,
    normalize,
    print_db,
    print_term,
    to_debruijn,
)

print("true: ", print_term(church_bool(True)), "=", print_db(to_debruijn(church_bool(True))))
print("false:", print_term(church_bool(False)), "=", print_db(to_debruijn(church_bool(False))))
print("three:", print_db(to_debruijn(church_numeral(3))))

# Multiplication normalizes to the numeral of the product.
product = church_mult(church_numeral(2), church_numeral(3))
print("\n2 * 3 as a term:", print_term(product))
result = normalize(product)
print("normalizes in", result.steps, "steps to:", print_db(to_debruijn(result.term)))
assert alpha_equal(result.term, church_numeral(6))

# Boolean expressions compile to terms whose normal form is the
# truth-table value, also in Church form.
expr = Or(And(TRUE, Not(FALSE)), FALSE)
term = encode_bool_expr(expr)
print("\nencoded or(and(T,not F),F):", print_term(term))
result = normalize(term)
print("normal form:", print_term(result.term))
print("agrees with the truth table:",
      alpha_equal(result.term, church_bool(eval_bool_expr(expr))))

# Open expressions keep their free variables.
open_term = encode_bool_expr(And(FreeVar("p"), FreeVar("q")))
stuck = normalize(open_term)
print("\nopen and(p,q) normal form:", print_term(stuck.term))

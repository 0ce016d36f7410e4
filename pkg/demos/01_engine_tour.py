"""Tour of the lambda calculus kernel.

Terms live in a whitespace-separated prefix syntax: ``L`` introduces an
abstraction, ``@`` an application, and everything else is a variable.
Run with: python demos/01_engine_tour.py
"""

from lambda_forge import (
    Strategy,
    alpha_equal,
    beta_reduce_once,
    find_redex,
    free_variables,
    from_debruijn,
    normalize,
    parse_debruijn,
    parse_traditional,
    print_db,
    print_term,
    substitute,
    to_debruijn,
)

# Parsing and printing are inverse on the token text.
term = parse_traditional("@ L x @ x x L y y")
print("term:         ", print_term(term))
print("free variables:", free_variables(parse_traditional("L x @ x y")))

# One reduction step under each strategy.
lazy = find_redex(term, Strategy.LAZY)
strict = find_redex(term, Strategy.STRICT)
print("lazy redex path:  ", lazy.path)
print("strict redex path:", strict.path)
print("one lazy step:    ", print_term(beta_reduce_once(term).term))

# Substitution is naive and reports when an alpha rename would have
# been needed instead of performing one.
body = parse_traditional("L y @ x y")
outcome = substitute(body, "x", parse_traditional("y"))
print("naive substitution:", print_term(outcome.term),
      "| capture flagged:", outcome.capture_required)

# Full normalization, with a step cap for terms without normal forms.
omega = parse_traditional("@ L x @ x x L x @ x x")
result = normalize(omega, Strategy.LAZY, 100)
print("omega after", result.steps, "steps:",
      "still reducible" if not result.reached_normal_form else "normal")

# Named and nameless representations convert both ways; index 0 marks a
# free variable and all index-0 occurrences share one name coming back.
print("to de Bruijn:  ", print_db(to_debruijn(parse_traditional("L x L y x"))))
print("from de Bruijn:", print_term(from_debruijn(parse_debruijn("L L 2"))))
print("alpha-equal:   ",
      alpha_equal(parse_traditional("L x x"), parse_traditional("L y y")))

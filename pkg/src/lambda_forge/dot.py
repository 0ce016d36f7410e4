"""DOT export of term trees."""

from __future__ import annotations

from .terms import Abs, DbAbs, DbTerm, DbVar, Term, Var


def term_to_dot(t: Term | DbTerm, graph_name: str = "term") -> str:
    """Render the term tree as a DOT digraph.

    Abstractions are labeled ``L x`` (just ``L`` in de Bruijn form),
    applications ``@``, and leaves carry the variable name or index.
    Application children are emitted function first, argument second.
    """
    nodes: list[str] = []
    edges: list[str] = []
    counter = 0

    def walk(node) -> int:
        nonlocal counter
        nid = counter
        counter += 1
        cls = node.__class__
        if cls is Var:
            nodes.append(f'  n{nid} [label="{node.name}"];')
        elif cls is DbVar:
            nodes.append(f'  n{nid} [label="{node.index}"];')
        elif cls is Abs:
            nodes.append(f'  n{nid} [label="L {node.param}"];')
            edges.append(f"  n{nid} -> n{walk(node.body)};")
        elif cls is DbAbs:
            nodes.append(f'  n{nid} [label="L"];')
            edges.append(f"  n{nid} -> n{walk(node.body)};")
        else:
            nodes.append(f'  n{nid} [label="@"];')
            edges.append(f"  n{nid} -> n{walk(node.fun)};")
            edges.append(f"  n{nid} -> n{walk(node.arg)};")
        return nid

    walk(t)
    body = "\n".join(nodes + edges)
    return f"digraph {graph_name} {{\n  ordering=out;\n{body}\n}}\n"

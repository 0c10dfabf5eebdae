# Two-phase search for repdigit Diophantine triples

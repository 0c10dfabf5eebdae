# Exact arithmetic: repdigits, number theory, effective bounds

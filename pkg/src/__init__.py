# Repdigit Diophantine triple search

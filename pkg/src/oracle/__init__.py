# Independent brute-force ground truth

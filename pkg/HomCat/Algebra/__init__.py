from .quantum import quantum_integer, quantum_factorial, quantum_binomial
from .symmetric import elementary, complete, schur, schur_from_elementary, schur_expand, littlewood_richardson, rewrite_pi_in_primes, expand_rewrite

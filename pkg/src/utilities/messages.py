invalid_discriminant_message = "{value} not a valid discriminant (must be odd or divisible by 8, fundamental)"
invalid_twist_message = "{value} not a valid twist (must be 1 or a fundamental discriminant prime to {D})"
class_number_message = "k shares factor with class number: gcd(2k-1, h) = gcd({m}, {h}) = {g}"
weight_message = "weight k must be a positive integer, got {k}"
derivative_not_meaningful = "root number +1: derivative route not meaningful for the central decomposition"
value_not_meaningful = "root number -1: central value vanishes structurally, value route not meaningful"
c_term_normalization_note = "C includes the 1/Gamma(k) factor carried by I2; differs from the unnormalized sum when k > 1"

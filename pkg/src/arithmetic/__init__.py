from src.arithmetic.discriminants import admissible_discriminants, admissible_twists, is_fundamental_discriminant, kronecker
from src.arithmetic.fields import LatticePoint, QuadraticField
from src.arithmetic.forms import class_number
from src.arithmetic.ideals import IdealZModule, ideal_from_generators, least_positive_integer
from src.arithmetic.lattice import principal_lattice_points

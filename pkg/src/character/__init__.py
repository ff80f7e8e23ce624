from src.character.canonical import EpsCharacter, build_canonical, make_character
from src.character.factorization import EpsFactorization, factor_eps
from src.character.validation import validate_character

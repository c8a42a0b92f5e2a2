from .config import RepConfig, RepContext, ConfigError
from .dictionary import assign, assign_element, dhat_op, DictionaryError
from .verify import (verify_bracket, verify_suite, rho_embedding_check,
                     negative_controls, family_elements, target_families)

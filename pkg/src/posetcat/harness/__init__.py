"""Random instance generation and the executable property catalog."""
from .generators import GenerationError, GeneratorConfig, gen_inclusion, gen_map, gen_space
from .properties import REGISTRY, Property
from .suite import (PropertyReport, SuiteConfig, SuiteReport, replay, run_property,
                    run_suite)

__all__ = ["GenerationError", "GeneratorConfig", "gen_inclusion", "gen_map", "gen_space",
           "REGISTRY", "Property", "PropertyReport", "SuiteConfig", "SuiteReport",
           "replay", "run_property", "run_suite"]

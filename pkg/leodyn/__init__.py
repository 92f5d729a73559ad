from .version import __version__
from .exceptions import LeodynError
from .interval_dynamics import (IntervalSet,
                                PiecewiseAffineMap,
                                doubling_map,
                                ball,
                                bowen_ball,
                                bowen_image_diam,
                                leo_certify,
                                expanding_check,
                                expansivity_first_separation,
                                conformal_like_check)
from .beta_expansions import (beta_map,
                              beta_expansion_of_one,
                              classify_specification,
                              beta_atlas)
from .symbolic import (SFT,
                       GraphShift,
                       SymbolSequence,
                       CylinderSet,
                       cylinder_image,
                       primitivity_index,
                       separated_count,
                       entropy_estimate,
                       leo_entropy_bound_check)
from .specification import (OrbitSegment,
                            SpecificationInstance,
                            IntervalRegionSystem,
                            ShiftRegionSystem,
                            covering_time,
                            shadow,
                            periodic_shadow,
                            spec_failure_witness)
from .constructions import (example1_map,
                            example2_map,
                            feliks_cantor,
                            feliks_verify,
                            rome_encode,
                            rome_decode,
                            lindenstrauss_membership)

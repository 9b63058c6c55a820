"""Dunwoody Heegaard diagrams, cyclic presentations and their first homology."""
from .covering import CoveringSpec, QuotientData, lens_order, lift, quotient, strongly_cyclic_check
from .diagram import DunwoodyParams, build, check_symmetry, induced_presentation, trace, validate
from .errors import DomainError, MalformedWordError, NotHeegaardError, ShapeError
from .homology import AbelianGroup, circulant_order, smith_normal_form
from .words import (CyclicPresentation, Presentation, Word, cyclic_reduce, detect_cyclic, family,
                    reduce, relators, shift)

__version__ = "0.1.0"

# flake8: noqa
from . import trees
from . import moves
from . import oracle

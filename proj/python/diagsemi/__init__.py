from ._diagsemi import *  # noqa: F401,F403

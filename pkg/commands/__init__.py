from .generate import generate_graph
from .solve import solve
from .construct import construct
from .repro import repro_all
from .experiment import run_gnp_experiment

import json
from typing import Any, Dict

from utils.enums import Backend
from utils.errors import RepresentationError
from vectors.representation import VectorRep


def rep_to_dict(rep: VectorRep) -> Dict[str, Any]:
    if rep.backend is Backend.GAUSSIAN:
        vectors = [[[int(e.x), int(e.y)] for e in vector]
                   for vector in rep.vectors]
    elif rep.backend is Backend.COMPLEX_FLOAT:
        vectors = [[[e.real, e.imag] for e in vector]
                   for vector in rep.vectors]
    else:
        vectors = [list(vector) for vector in rep.vectors]
    data = {'dim': rep.dim, 'backend': rep.backend.value, 'vectors': vectors}
    if rep.order is not None:
        data['order'] = rep.order
    return data


def rep_from_dict(data: Dict[str, Any]) -> VectorRep:
    try:
        backend = Backend(data['backend'])
        return VectorRep(int(data['dim']), backend,
                         tuple(tuple(v) for v in data['vectors']),
                         order=data.get('order'))
    except (KeyError, TypeError, ValueError) as e:
        raise RepresentationError(f'malformed vector JSON: {e}')


def load_rep(text: str) -> VectorRep:
    return rep_from_dict(json.loads(text))

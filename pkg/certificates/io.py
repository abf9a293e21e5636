import json
from typing import Any, Dict, Tuple, Union

import numpy as np

from certificates.models import GeneralCert, ProjectorCert, Rank1Cert
from graphs.graph import Graph
from graphs.io import graph_from_dict, graph_to_dict
from utils.enums import CertificateKind
from utils.errors import CertificateError
from utils.misc import complex_from_json, complex_to_json

AnyCert = Union[Rank1Cert, ProjectorCert, GeneralCert]


def cert_to_dict(graph: Graph, cert: AnyCert) -> Dict[str, Any]:
    data = {'kind': cert.kind.value, 'c': cert.c,
            'graph': graph_to_dict(graph)}
    if isinstance(cert, Rank1Cert):
        data['matrices'] = complex_to_json(cert.unitaries)
    elif isinstance(cert, ProjectorCert):
        data['r'] = cert.r
        data['matrices'] = complex_to_json(cert.projectors)
    else:
        data['dA'] = cert.dA
        data['dB'] = cert.dB
        data['state'] = complex_to_json(cert.state)
        data['matrices'] = {'alice': complex_to_json(cert.alice),
                            'bob': complex_to_json(cert.bob)}
    return data


def measurements_from_dict(data: Dict[str, Any]) -> Tuple[Graph, np.ndarray]:
    """Projector arrays of possibly mixed ranks, without a declared r"""
    if data.get('kind') != CertificateKind.PROJECTOR.value:
        raise CertificateError('Measurements must be stored as a projector '
                               'certificate')
    return graph_from_dict(data['graph']), \
        complex_from_json(data['matrices'])


def cert_from_dict(data: Dict[str, Any]) -> Tuple[Graph, AnyCert]:
    try:
        kind = CertificateKind(data['kind'])
        graph = graph_from_dict(data['graph'])
        if kind is CertificateKind.RANK1:
            cert = Rank1Cert(complex_from_json(data['matrices']))
        elif kind is CertificateKind.PROJECTOR:
            cert = ProjectorCert(int(data['r']),
                                 complex_from_json(data['matrices']))
        else:
            cert = GeneralCert(complex_from_json(data['state']),
                               complex_from_json(data['matrices']['alice']),
                               complex_from_json(data['matrices']['bob']))
    except (KeyError, TypeError, ValueError) as e:
        raise CertificateError(f'malformed certificate JSON: {e}')
    if 'c' in data and int(data['c']) != cert.c:
        raise CertificateError(f'Declared {data["c"]} colours, matrices '
                               f'hold {cert.c}')
    return graph, cert


def load_cert(text: str) -> Tuple[Graph, AnyCert]:
    return cert_from_dict(json.loads(text))


def dump_cert(graph: Graph, cert: AnyCert) -> str:
    return json.dumps(cert_to_dict(graph, cert))

import factory


class RunPayloadFactory(factory.DictFactory):
    """Raw RunConfig values as the CLI hands them to the serializer"""

    problem = 'gasdyn'
    alpha = 0.8
    psi = 'identity'
    hbar = -1.0
    m_terms = 3
    n_points = 81
    probe_x = 0.4
    t_max = 0.5
    n_samples = 6

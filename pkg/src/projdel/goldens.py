"""Golden values for ``reproduce``; generated by scripts/derive_goldens.py."""

GOLDENS = {'cub-hyp': {'branch_count': 2,
             'multiplicities': [1, 1],
             'multiset_above_0': [1, 1],
             'roots_above_2': ['-8', '1/2']},
 'finite-01': {'0': {'projective': [1, 2], 'real': [2]},
               '1': {'projective': [1, 2], 'real': [1]},
               'delineable': False,
               'projectively_delineable': True},
 'lc-line': {'multiset_at_0': [3],
             'multiset_generic': [1],
             'witness_point': ['0', '0']},
 'p-del-not-proj': {'x1*x2-1': {'projective_consistent': True,
                                'real_consistent': False,
                                'witness_point': ['0']},
                    'x1^2*x2^2+1': {'projective_consistent': False,
                                    'real_consistent': True,
                                    'witness_point': ['0']}},
 'prop4-circle': {'branch_count': 2,
                  'disc_constant': '1',
                  'monodromy': '(1 2)',
                  'multiplicities': [2, 2],
                  'orders': [2, 2, 2, 2]},
 'scc': {'classical': ['-1', '0'],
         'disc': 'x1**2 - 1',
         'lc': 'x1',
         'projective': ['-1', '1'],
         'res': 'x1**4 - x1**2 + 1'}}

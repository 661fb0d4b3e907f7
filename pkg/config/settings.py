"""
Configuration for the Zhu / C2-algebra computations and verification suites
"""

# Brute-force character oracle limits
ORACLE_CONFIG = {
    'max_rank': 6,                     # Largest rank the oracle accepts
    'max_level': 6,                    # Largest (λ, θ) for irreducible characters
    'max_partition_size': 12,          # Largest |λ| for Schur characters / GL restriction
    'max_tensor_level': 8,             # Largest level(λ) + level(μ) for tensor products
}

# Feasibility envelopes per verification suite (inclusive upper bounds)
SUITE_CONFIG = {
    'parallel_workers': 1,             # In-process unless --parallel is given
    'show_progress': True,             # tqdm progress bars on stderr
    'envelopes': {
        'conjecture-c': {'max_m': 3, 'max_k': 5},
        'branch-dims': {'max_m': 4, 'max_k': 4},
        'kt-oracle': {'max_m': 3, 'max_size': 10},
        'laws': {'max_m': 3, 'max_k': 4},
        'pair-oracle': {'max_m': 3, 'max_k': 2},
        'levi-diagonal': {'max_m': 2, 'max_k': 2},
        'quotient': {'max_m': 6, 'max_k': 4},
        'exterior': {'max_m': 2, 'max_k': 0},
    },
    # Tighter per-m bounds inside an envelope
    'kt_oracle_max_size': {1: 10, 2: 10, 3: 8},
    'pair_oracle_cases': {'sp': {'max_m': 2, 'max_k': 2}, 'so': {'max_m': 3, 'max_k': 1}},
    'levi_diagonal_bounds': {1: 2, 2: 1},
}

# Output rendering
OUTPUT_CONFIG = {
    'default_format': 'table',
    'formats': ('table', 'json', 'csv'),
    'json_indent': 2,
    'csv_columns': ('object', 'j', 'left', 'right', 'mult', 'dim'),
}

# Logging configuration
LOGGING_CONFIG = {
    'level': 'INFO',
    'format': '%(name)s - %(message)s',
    'datefmt': '%H:%M:%S',
    'console_handler': True,
}

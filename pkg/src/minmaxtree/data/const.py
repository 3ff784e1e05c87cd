####################################################################################################
# EXACT ARITHMETIC
####################################################################################################

# 20! < 2^63, so every count over S_n fits a signed 64-bit integer
max_exact_n = 20

####################################################################################################
# CENSUS
####################################################################################################

min_census_n = 3
default_census_max_n = 13
max_verify_n = 10

# The middle range 2 <= i <= n-2 is empty below this size
min_corollary_n = 4

# Children counts use slice scans up to this size, sparse tables above
scan_kernel_max_n = 20

# Permutations tallied per numpy reduction in a census interval
census_chunk = 1 << 16

####################################################################################################
# ACTION
####################################################################################################

max_orbit_generators = 25

####################################################################################################
# SAMPLING
####################################################################################################

default_z = 5.0
min_reliable_trials = 100

####################################################################################################
# ENVIRONMENT
####################################################################################################

workers_env = "MINMAXTREE_WORKERS"
debug_env = "MINMAXTREE_DEBUG"

####################################################################################################
# OUTPUT
####################################################################################################

output_formats = ["text", "json", "csv", "dot"]
tree_formats = ["text", "json", "dot"]
table_formats = ["text", "json", "csv"]
csv_header = ["i", "leaf", "d0", "d1", "d2"]

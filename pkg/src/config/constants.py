"""Константы для приложения."""

DEFAULT_SAMPLE_COUNT = 12
DEFAULT_RANDOM_SEED = 20240917

# Ранг матрицы значений в (G2) равен 6, поэтому меньше 9 точек не берём
MIN_G2_SAMPLES = 9

MAX_SAMPLING_ATTEMPTS = 1000
SAMPLE_RANGE = 9

EXIT_VALIDATION = 1
EXIT_INTERNAL = 2

OUTPUT_JSON = "json"
OUTPUT_PRETTY = "pretty"

# Ограничение |k| в записи x^k при разборе элементов поля
MAX_PARSE_EXPONENT = 64

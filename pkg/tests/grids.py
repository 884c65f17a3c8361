"""Frozen reference grids used across tests.

TOY_A/TOY_B are small worked-example matrices for the holistic measures.
The two factuality grids are published cross-dataset results (percent of
consistent sentences) for one extractive and one abstractive summarizer,
together with the row/column averages as printed in their source table.
"""

DATASETS = ("cnndm", "xsum", "pubmed", "bigpatent_b", "reddit")

TOY_A = [[48.0, 40.0], [41.0, 45.0]]
TOY_B = [[61.0, 43.0], [46.0, 69.0]]

FACT_EXTRACTIVE = [
    [100.0, 100.0, 98.0, 99.1, 100.0],
    [99.8, 100.0, 97.4, 98.2, 100.0],
    [97.7, 98.8, 95.1, 94.7, 100.0],
    [98.3, 99.8, 96.3, 97.4, 99.5],
    [90.3, 94.1, 94.1, 86.7, 96.3],
]
FACT_EXTRACTIVE_ROW_AVG = [99.4, 99.1, 97.3, 98.3, 92.3]
FACT_EXTRACTIVE_COL_AVG = [97.2, 98.6, 96.2, 95.2, 99.2]
FACT_EXTRACTIVE_OVERALL = 97.3

FACT_ABSTRACTIVE = [
    [69.9, 77.9, 87.4, 84.1, 90.2],
    [35.5, 24.7, 36.1, 50.1, 50.7],
    [69.5, 61.5, 58.4, 61.3, 94.1],
    [52.1, 53.8, 69.0, 67.4, 76.8],
    [59.6, 50.3, 69.1, 49.3, 44.2],
]
FACT_ABSTRACTIVE_ROW_AVG = [81.9, 39.4, 69.0, 63.8, 54.5]
FACT_ABSTRACTIVE_COL_AVG = [57.3, 53.6, 64.0, 62.4, 71.2]
FACT_ABSTRACTIVE_OVERALL = 61.7

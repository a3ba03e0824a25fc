"""
This module contains the constants used in the project.

Attributes:
    PATTERNS: The four row/column interleaving patterns and the other fixed patterns used by the theorems
    THEOREMS: Theorem identifiers of the class enumerator, in dispatch priority order
    BIJECTIONS: Theorem identifiers accepted by the bijection lab
"""


class PATTERNS:
    """
    Fixed patterns. ``R_U`` and ``R_D`` force decreasing (resp. increasing) rows of the staircase
    encoding; ``C_U`` and ``C_D`` do the same for columns.
    """
    R_U = "2314"
    C_U = "3124"
    R_D = "2413"
    C_D = "3142"
    P_2134 = "2134"
    P_2143 = "2143"


class THEOREMS:
    """
    Class-enumeration theorems. ``ORDER`` is the detection order; it breaks dispatch ties between
    matches with equally many parameters.
    """
    TRIVIAL = "trivial"
    BASE_123 = "base_123"
    BASE_132 = "base_132"
    GF_UPCORE = "gf_upcore"
    GF_DOWNCORE = "gf_downcore"
    GF_RDCDRUCU = "gf_rdcdrucu"
    GF_RUCUPI = "gf_rucupi"
    GF_RDCDPI = "gf_rdcdpi"
    GF_RDCU = "gf_rdcu"
    RD_2134 = "rd_2134"
    RU_2143 = "ru_2143"
    ORACLE = "oracle"

    ORDER = [TRIVIAL, BASE_123, BASE_132, GF_UPCORE, GF_DOWNCORE, GF_RDCDRUCU,
             GF_RUCUPI, GF_RDCDPI, GF_RDCU, RD_2134, RU_2143]


class BIJECTIONS:
    """
    Structural theorems whose bijections the lab materializes, with accepted aliases.
    """
    THM_123 = "thm_123"
    THM_132 = "thm_132"
    INF_UPCORE = "inf_upcore"
    INF_DOWNCORE = "inf_downcore"
    INF_UDRC = "inf_udrc"
    INF_CU_CD_RU = "inf_cu_cd_ru"
    INF_RD_CD_CU = "inf_rd_cd_cu"
    INF_RD_CU = "inf_rd_cu"
    INF_RD_2134 = "inf_rd_2134"
    INF_RU_2143 = "inf_ru_2143"

    ALIASES = {
        "rd_2134": INF_RD_2134,
        "ru_2143": INF_RU_2143,
        "udrc": INF_UDRC,
        "rd_cu": INF_RD_CU,
    }


class DEFAULTS:
    """
    Default numeric limits (overridable through the settings).
    """
    TRUNCATION_ORDER = 14
    ORACLE_CEILING = 11
    SAMPLER_GRID_CEILING = 10
    BIJECTION_CEILING = 10

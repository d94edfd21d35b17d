"""File schemas for pairs, search listings, scenarios and sweep results."""
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.domain.entities.pattern import Quantity, Scale
from src.domain.entities.sequence import Alphabet, infer_alphabet
from src.domain.services.golay_array import Layout

# Narrowest first
_ALPHABET_ORDER = [Alphabet.BINARY, Alphabet.QUATERNARY, Alphabet.POLYPHASE]


class SequenceFile(BaseModel):
    """Schema for a single unimodular sequence."""

    alphabet: Alphabet = Field(..., description="binary, quaternary or polyphase")
    phases: list[float] = Field(..., min_length=1, description="Phase angles in radians")

    @model_validator(mode="after")
    def check_alphabet(self) -> "SequenceFile":
        """Every phase must belong to the declared alphabet."""
        found = infer_alphabet(self.phases)
        if _ALPHABET_ORDER.index(found) > _ALPHABET_ORDER.index(self.alphabet):
            raise ValueError(f"phases are {found.value}, declared {self.alphabet.value}")
        return self


class SequencePairFile(BaseModel):
    """Schema for a sequence pair file."""

    u: SequenceFile
    w: SequenceFile

    @model_validator(mode="after")
    def check_lengths(self) -> "SequencePairFile":
        if len(self.u.phases) != len(self.w.phases):
            raise ValueError("sequence lengths differ")
        return self


class ArrayPairFile(BaseModel):
    """Schema for an array pair file (row-major phases in radians)."""

    model_config = ConfigDict(populate_by_name=True)

    dims: tuple[int, int] = Field(..., description="(N1, N2)")
    u_phases: list[list[float]] = Field(..., alias="U_phases")
    w_phases: list[list[float]] = Field(..., alias="W_phases")

    @model_validator(mode="after")
    def check_dims(self) -> "ArrayPairFile":
        """Both matrices must be N1 x N2 as declared."""
        n1, n2 = self.dims
        if n1 < 1 or n2 < 1:
            raise ValueError("dims must be positive")
        for label, rows in (("U_phases", self.u_phases), ("W_phases", self.w_phases)):
            if len(rows) != n1 or any(len(row) != n2 for row in rows):
                raise ValueError(f"{label} does not match dims {n1}x{n2}")
        return self


class SearchResultFile(BaseModel):
    """Schema for an exhaustive-search listing."""

    length: int = Field(..., ge=1)
    alphabet_size: int
    count: int
    pairs: list[SequencePairFile]


class GeometrySchema(BaseModel):
    """Surface geometry in meters; defaults are a 16 x 16 half-wavelength surface."""

    n_y: int = Field(default=16, ge=1)
    n_z: int = Field(default=16, ge=2)
    delta_y: float = Field(default=0.005, gt=0)
    delta_z: float = Field(default=0.005, gt=0)
    wavelength: float = Field(default=0.01, gt=0)


class SeedSpec(BaseModel):
    """Construct the configuration pair from cataloged seeds."""

    l1: int = Field(default=8, ge=1)
    l2: int = Field(default=8, ge=1)
    alphabet1: Alphabet = Alphabet.BINARY
    alphabet2: Alphabet = Alphabet.QUATERNARY
    layout: Layout = Layout.STACKED


class ConfigSource(BaseModel):
    """Exactly one way of obtaining the configuration pair."""

    seeds: Optional[SeedSpec] = None
    pair_file: Optional[str] = None
    inline: Optional[ArrayPairFile] = None

    @model_validator(mode="after")
    def one_source(self) -> "ConfigSource":
        """Default to the published seeds; reject ambiguous sources."""
        given = [s for s in (self.seeds, self.pair_file, self.inline) if s is not None]
        if len(given) > 1:
            raise ValueError("config must name exactly one of seeds, pair_file, inline")
        if not given:
            self.seeds = SeedSpec()
        return self


class DirectionSchema(BaseModel):
    """Direction in degrees."""

    azimuth: float = Field(..., ge=-90, le=90)
    elevation: float = Field(..., ge=-90, le=90)


class ElementGainSchema(BaseModel):
    """Element gain parameters; angles in degrees."""

    phi0: float = 0.0
    theta0: float = 0.0
    delta_phi: float = Field(default=90.0, gt=0)
    delta_theta: float = Field(default=90.0, gt=0)
    peak_gain_dbi: float = 8.0
    floor_db: float = Field(default=30.0, ge=0)


class LinkBudgetSchema(BaseModel):
    """Link factors in linear SI units."""

    m: int = Field(default=1, ge=1)
    p_t: float = Field(default=1.0, gt=0)
    beta1: float = Field(default=1.0, gt=0)
    beta2: float = Field(default=1.0, gt=0)
    g_b0: float = Field(default=1.0, gt=0)


class GridSchema(BaseModel):
    """Sweep grid in degrees, inclusive endpoints."""

    az_min: float = -60.0
    az_max: float = 60.0
    n_az: int = Field(default=181, ge=1)
    el_min: float = -30.0
    el_max: float = 30.0
    n_el: int = Field(default=61, ge=1)


class ScenarioFile(BaseModel):
    """Schema for a scenario file; every default mirrors the published experiment."""

    geometry: GeometrySchema = Field(default_factory=GeometrySchema)
    config: ConfigSource = Field(default_factory=ConfigSource)
    aoa: DirectionSchema = Field(
        default_factory=lambda: DirectionSchema(azimuth=-60.0, elevation=60.0)
    )
    element_gain: ElementGainSchema = Field(default_factory=ElementGainSchema)
    link_budget: LinkBudgetSchema = Field(default_factory=LinkBudgetSchema)
    grid: GridSchema = Field(default_factory=GridSchema)


class PatternMapFile(BaseModel):
    """Schema for a sweep result with explicit axes (degrees)."""

    quantity: Quantity
    scale: Scale
    config_id: str = ""
    aoa_deg: Optional[tuple[float, float]] = None
    azimuth_deg: list[float]
    elevation_deg: list[float]
    values: list[list[float]] = Field(..., description="Rows follow elevation_deg")

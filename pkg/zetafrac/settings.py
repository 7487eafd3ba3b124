import os
from typing import Literal

from pydantic import Field
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    TomlConfigSettingsSource,
)


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="ZETAFRAC_",
        env_file=".env",
        toml_file="zetafrac.toml",
        extra="ignore",
    )

    env: str = "dev"

    # ZETAFRAC_THREADS caps worker concurrency; None means os.cpu_count()
    threads: int | None = None

    # None selects 3*s + 64 bits per exponent
    precision_bits: int | None = None
    max_rounds: int = 64
    # deepest refinement level; terms and the prime limit double per level
    max_level: int = Field(default=8, ge=0)
    prime_limit: int = 100_000

    chunk_size: int = 2_000
    sample_stride: int = 1_000
    histogram_bins: int = 10

    output_format: Literal["text", "json", "csv"] = "text"

    log_level: str = "INFO"
    log_dir: str | None = None

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # flags > env > .env > zetafrac.toml
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            TomlConfigSettingsSource(settings_cls),
        )

    def with_overrides(self, **flags) -> "Settings":
        """Return a copy with every non-None flag applied on top."""
        updates = {k: v for k, v in flags.items() if v is not None and k in type(self).model_fields}
        return self.model_copy(update=updates)

    @property
    def workers(self) -> int:
        return max(1, self.threads or os.cpu_count() or 1)

settings = Settings()

from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    APP_NAME: str = "biquad"
    APP_ADDRESS: str = "0.0.0.0"
    APP_PORT: int = 8000

    LOG_LEVEL: str = "INFO"
    LOG_DIR: str = "logs"
    SAVE_TRACE_LOG: bool = False

    MAX_N: int = 4
    TORSION_BOUND: int = 12
    SEARCH_WORKERS: int = 1
    SAMPLE_BOUND: int = 5

    model_config = SettingsConfigDict(
        env_file=str(Path(__file__).resolve().parents[2] / ".env"),
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )


settings = Settings()

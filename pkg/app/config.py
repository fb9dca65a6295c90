"""Configuration management for the application."""
from pathlib import Path
from pydantic_settings import BaseSettings

BASE_DIR = Path(__file__).resolve().parent.parent


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""
    
    # API Configuration
    API_TITLE: str = "Hypertag Entropy API"
    API_VERSION: str = "1.0.0"
    DEBUG: bool = False
    
    # Logging
    LOG_LEVEL: str = "INFO"
    
    # Bundled data files
    DATA_DIR: Path = BASE_DIR / "data"
    DEFAULT_TAGSET_FILE: Path = BASE_DIR / "data" / "demo_tagset.txt"
    DEFAULT_RULES_FILE: Path = BASE_DIR / "data" / "demo_rules.txt"
    DEFAULT_CORPUS_FILE: Path = BASE_DIR / "data" / "demo_corpus.txt"
    
    # Experiment defaults
    MAX_N: int = 3
    PER_SENTENCE_WINDOWS: bool = False
    SCHEMES: str = "p,a,d,n,s,sn"
    REPORT_FORMAT: str = "text"
    
    # Counting
    WORKERS: int = 1  # 1 = sequential
    COUNT_CHUNK_SIZE: int = 50000
    
    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"  # Ignore any extra env vars not defined here


settings = Settings()

from pydantic import BaseModel, Field, field_validator

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class CompressSchema(BaseModel):
    max_raw_len: int = Field(2**31 - 2, ge=0, le=2**31 - 2)


class SolverSchema(BaseModel):
    alphabet_size: int = Field(256, ge=1, le=256)


class GenSchema(BaseModel):
    max_thue_morse_k: int = Field(24, ge=0, le=24)
    max_fibonacci_k: int = Field(30, ge=0, le=30)
    default_seed: int = 0


class LoggingSchema(BaseModel):
    level: str = "WARNING"

    @field_validator("level")
    @classmethod
    def validate_level(cls, v):
        if v.upper() not in LOG_LEVELS:
            raise ValueError(f"level must be one of {', '.join(LOG_LEVELS)}")
        return v.upper()


class SesxConfigSchema(BaseModel):
    compress: CompressSchema = CompressSchema()
    solver: SolverSchema = SolverSchema()
    gen: GenSchema = GenSchema()
    logging: LoggingSchema = LoggingSchema()

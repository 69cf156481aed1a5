from pydantic_settings import BaseSettings, SettingsConfigDict

from singgraph import __version__


class Settings(BaseSettings):
    """应用配置"""
    # 项目名称
    PROJECT_NAME: str = "singgraph"

    # 写入每份报告的工具版本
    VERSION: str = __version__

    # 随机语料的种子，只用于测试和 gen random，不影响报告内容
    SEED: int = 20231017

    # CLI 的日志级别
    LOG_LEVEL: str = "WARNING"

    # 未指定 --format 时的报告格式
    DEFAULT_FORMAT: str = "json"

    # blowdown 递归的深度上限
    MAX_TOWER_DEPTH: int = 64

    model_config = SettingsConfigDict(
        env_prefix="SINGGRAPH_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )


# 创建全局设置实例
settings = Settings()

"""统一错误消息定义

提供中英文双语错误消息，便于国际化和统一管理。

使用示例：
    from src.utils.error_messages import ErrorMessages

    # 获取中文错误消息
    error = ErrorMessages.get("ORDER_OUT_OF_RANGE", k=7, low=1, high=6)

    # 获取英文错误消息
    error_en = ErrorMessages.get("ORDER_OUT_OF_RANGE", lang="en", k=7, low=1, high=6)
"""


class ErrorMessages:
    """错误消息类

    提供所有错误消息的统一访问接口，支持中英文双语。
    """

    # ========================================================================
    # 求积权重
    # ========================================================================

    ORDER_OUT_OF_RANGE = "BDF 阶数 k={k} 超出支持范围 [{low}, {high}]"
    ORDER_OUT_OF_RANGE_EN = "BDF order k={k} outside supported range [{low}, {high}]"

    FRACTIONAL_ORDER_INVALID = "分数阶 γ={gamma} 必须位于 (0, 1)"
    FRACTIONAL_ORDER_INVALID_EN = "Fractional order gamma={gamma} must lie in (0, 1)"

    WEIGHT_COUNT_INVALID = "权重个数 n_max={n_max} 不能为负"
    WEIGHT_COUNT_INVALID_EN = "Weight count n_max={n_max} must be non-negative"

    STEP_SIZE_INVALID = "时间步长 τ={tau} 必须为正"
    STEP_SIZE_INVALID_EN = "Step size tau={tau} must be positive"

    TEMPERING_INVALID = "调和参数 σ={sigma} 不能为负"
    TEMPERING_INVALID_EN = "Tempering sigma={sigma} must be non-negative"

    # ========================================================================
    # 空间算子
    # ========================================================================

    GRID_TOO_SMALL = "网格区间数 M={M} 至少为 {minimum}"
    GRID_TOO_SMALL_EN = "Grid size M={M} must be at least {minimum}"

    SPACE_ORDER_INVALID = "空间阶数 α={alpha} 必须位于 (1, 2]"
    SPACE_ORDER_INVALID_EN = "Space order alpha={alpha} must lie in (1, 2]"

    MODE_COUNT_INVALID = "模态数 n_modes={n_modes} 必须位于 [1, {limit}]"
    MODE_COUNT_INVALID_EN = "Mode count n_modes={n_modes} must lie in [1, {limit}]"

    EIGENVALUE_NOT_POSITIVE = "特征值实部非正: min Re λ = {value}"
    EIGENVALUE_NOT_POSITIVE_EN = "Eigenvalue with non-positive real part: min Re lambda = {value}"

    EIGENVALUE_COMPLEX = "特征值虚部过大: max|Im λ| = {imag}, 容差 {tol}"
    EIGENVALUE_COMPLEX_EN = "Eigenvalue imaginary part too large: max|Im lambda| = {imag}, tolerance {tol}"

    EIGENVECTORS_SINGULAR = "特征向量矩阵数值奇异: 条件数 {cond:.3e}"
    EIGENVECTORS_SINGULAR_EN = "Eigenvector matrix numerically singular: condition {cond:.3e}"

    SHIFT_INVALID = "平移量 μ={mu} 必须为正"
    SHIFT_INVALID_EN = "Shift mu={mu} must be positive"

    DIMENSION_MISMATCH = "维度不匹配: 期望 {expected}, 实际 {actual}"
    DIMENSION_MISMATCH_EN = "Dimension mismatch: expected {expected}, got {actual}"

    # ========================================================================
    # 时间推进
    # ========================================================================

    STEP_COUNT_INVALID = "步数 N={N} 必须不小于阶数 k={k}"
    STEP_COUNT_INVALID_EN = "Step count N={N} must be at least the order k={k}"

    DERIVATIVES_MISSING = "k={k} 的修正格式需要 {needed} 个初始导数, 仅提供 {given} 个"
    DERIVATIVES_MISSING_EN = "Corrected order k={k} needs {needed} initial derivatives, got {given}"

    ALPHA_MISMATCH = "问题的 α={problem} 与算子的 α={operator} 不一致"
    ALPHA_MISMATCH_EN = "Problem alpha={problem} differs from operator alpha={operator}"

    FINAL_TIME_INVALID = "终止时间 T={T} 必须为正"
    FINAL_TIME_INVALID_EN = "Final time T={T} must be positive"

    INITIAL_DATA_INVALID = "初值包含非有限值"
    INITIAL_DATA_INVALID_EN = "Initial data contains non-finite values"

    SOLUTION_BLOW_UP = "第 {step} 步解范数 {norm:.3e} 超过阈值 {limit:.3e}"
    SOLUTION_BLOW_UP_EN = "Solution norm {norm:.3e} at step {step} exceeds limit {limit:.3e}"

    # ========================================================================
    # 参考解
    # ========================================================================

    ML_PARAMETERS_INVALID = "Mittag-Leffler 参数不受支持: γ={gamma}, β={beta}, z={z}"
    ML_PARAMETERS_INVALID_EN = "Unsupported Mittag-Leffler parameters: gamma={gamma}, beta={beta}, z={z}"

    TIME_NEGATIVE = "时间 t={t} 不能为负"
    TIME_NEGATIVE_EN = "Time t={t} must be non-negative"

    QUADRATURE_NOT_CONVERGED = "积分未收敛: 最后两次结果 {previous} 与 {current}"
    QUADRATURE_NOT_CONVERGED_EN = "Quadrature did not converge: last values {previous} and {current}"

    ML_INTEGRAL_INACCURATE = "Mittag-Leffler 积分表示精度不足: 值 {value}, 误差估计 {error}"
    ML_INTEGRAL_INACCURATE_EN = "Mittag-Leffler integral representation inaccurate: value {value}, error estimate {error}"

    # ========================================================================
    # 实验与配置
    # ========================================================================

    EXAMPLE_UNKNOWN = "未知算例: {name}"
    EXAMPLE_UNKNOWN_EN = "Unknown example: {name}"

    CASE_UNKNOWN = "未注册的研究用例: {name}"
    CASE_UNKNOWN_EN = "Unregistered study case: {name}"

    CONFIG_FILE_NOT_FOUND = "配置文件未找到: {path}"
    CONFIG_FILE_NOT_FOUND_EN = "Configuration file not found: {path}"

    CONFIG_NOT_FLAT = "配置项 '{name}' 必须是标量或列表"
    CONFIG_NOT_FLAT_EN = "Configuration key '{name}' must be a scalar or a list"

    CONFIG_INVALID_VALUE = "配置项 '{name}' 的值无效: {value}"
    CONFIG_INVALID_VALUE_EN = "Invalid value for configuration key '{name}': {value}"

    REPORT_FORMAT_UNKNOWN = "未知报告格式: {fmt}"
    REPORT_FORMAT_UNKNOWN_EN = "Unknown report format: {fmt}"

    @classmethod
    def get(cls, key: str, /, lang: str = "zh", **kwargs) -> str:
        """获取错误消息

        Args:
            key: 消息键（类属性名）
            lang: 语言 ("zh" 或 "en")
            **kwargs: 格式化参数

        Returns:
            str: 格式化的错误消息

        Examples:
            >>> ErrorMessages.get("SHIFT_INVALID", mu=-1)
            '平移量 μ=-1 必须为正'

            >>> ErrorMessages.get("SHIFT_INVALID", lang="en", mu=-1)
            'Shift mu=-1 must be positive'
        """
        # 根据语言选择后缀
        suffix = "_EN" if lang == "en" else ""

        # 获取消息模板
        message_key = f"{key}{suffix}"
        message = getattr(cls, message_key, key)

        # 如果没有找到指定语言的版本，回退到默认版本
        if message == key and suffix:
            message = getattr(cls, key, key)

        # 格式化消息
        try:
            return message.format(**kwargs) if kwargs else message
        except (KeyError, ValueError):
            # 格式化失败，返回未格式化的消息
            return message

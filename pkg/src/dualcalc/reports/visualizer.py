"""可视化模块"""

import os
import platform

import matplotlib
import matplotlib.font_manager as fm
import matplotlib.pyplot as plt
import pandas as pd


_FONT_CANDIDATES = {
    "Windows": ["Microsoft YaHei", "SimHei", "SimSun"],
    "Darwin": ["PingFang SC", "Heiti SC", "Hiragino Sans GB"],
}
_LINUX_FONTS = ["WenQuanYi Micro Hei", "Noto Sans CJK SC", "Source Han Sans SC"]


def _setup_chinese_font() -> None:
    """把系统里第一个可用的中文字体放到 sans-serif 列表最前面"""
    candidates = _FONT_CANDIDATES.get(platform.system(), _LINUX_FONTS)
    installed = {f.name for f in fm.fontManager.ttflist}
    preferred = [font for font in candidates if font in installed] or candidates
    matplotlib.rcParams["font.sans-serif"] = preferred + matplotlib.rcParams["font.sans-serif"]
    matplotlib.rcParams["axes.unicode_minus"] = False


class Visualizer:
    """图表生成器"""

    def __init__(self, output_dir: str = "reports"):
        """
        初始化可视化器

        Args:
            output_dir: 输出目录
        """
        self.output_dir = output_dir
        os.makedirs(output_dir, exist_ok=True)

        try:
            plt.style.use("seaborn-v0_8-darkgrid")
        except OSError:
            plt.style.use("ggplot")

        # 样式会覆盖字体设置
        _setup_chinese_font()

    def _save(self, fig, filename: str) -> str:
        output_path = os.path.join(self.output_dir, filename)
        fig.tight_layout()
        fig.savefig(output_path, dpi=300, bbox_inches="tight")
        plt.close(fig)
        return output_path

    def plot_trace_measures(
        self, trace_df: pd.DataFrame, filename: str = "trace_measures.png", title: str = ""
    ) -> str:
        """
        绘制归约序列上 |D|、‖D‖ 与 r(D) 的变化

        Args:
            trace_df: ReportGenerator.trace_frame 的结果
            filename: 输出文件名
            title: 图标题

        Returns:
            输出文件完整路径；序列为空时返回空字符串
        """
        if trace_df.empty:
            return ""

        fig, (ax_size, ax_rank) = plt.subplots(2, 1, figsize=(12, 8), sharex=True)
        steps = trace_df["步骤"]

        ax_size.plot(steps, trace_df["大小"], marker="o", linewidth=2, color="#2E86AB", label="|D|")
        ax_size.plot(
            steps, trace_df["权重"], marker="s", linewidth=2, color="#A23B72", label="‖D‖"
        )
        ax_size.set_ylabel("大小 / 权重", fontsize=12, fontweight="bold")
        ax_size.legend(loc="upper right")
        ax_size.grid(True, alpha=0.3, linestyle="--")

        ax_rank.step(steps, trace_df["秩"], where="post", linewidth=2, color="#F18F01", label="r(D)")
        ax_rank.set_xlabel("归约步数", fontsize=12, fontweight="bold")
        ax_rank.set_ylabel("秩", fontsize=12, fontweight="bold")
        ax_rank.legend(loc="upper right")
        ax_rank.grid(True, alpha=0.3, linestyle="--")

        fig.suptitle(title or "归约序列上的度量", fontsize=16, fontweight="bold")
        return self._save(fig, filename)

    def plot_graph_depths(
        self, nodes_df: pd.DataFrame, filename: str = "graph_depths.png", title: str = ""
    ) -> str:
        """
        绘制归约图每一层的节点数，正规形单独标出

        Args:
            nodes_df: ReportGenerator.graph_frames 的节点表
            filename: 输出文件名

        Returns:
            输出文件完整路径
        """
        if nodes_df.empty:
            return ""

        counts = nodes_df.groupby("深度").size()
        normal = nodes_df[nodes_df["正规形"]].groupby("深度").size()
        normal = normal.reindex(counts.index, fill_value=0)

        fig, ax = plt.subplots(figsize=(12, 6))
        bars = ax.bar(counts.index, counts.values, color="#2E86AB", alpha=0.7, label="节点")
        ax.bar(normal.index, normal.values, color="#C73E1D", alpha=0.9, label="正规形")

        for bar, count in zip(bars, counts.values):
            ax.text(
                bar.get_x() + bar.get_width() / 2.0,
                bar.get_height(),
                f"{count}",
                ha="center",
                va="bottom",
                fontsize=9,
            )

        ax.set_xlabel("深度", fontsize=12, fontweight="bold")
        ax.set_ylabel("节点数", fontsize=12, fontweight="bold")
        ax.set_title(title or "归约图各层节点数", fontsize=16, fontweight="bold", pad=20)
        ax.legend(loc="upper right")
        ax.grid(True, alpha=0.3, linestyle="--", axis="y")
        return self._save(fig, filename)

    def plot_measure_comparison(
        self, measure_df: pd.DataFrame, filename: str = "measures.png"
    ) -> str:
        """各表达式的 |D| 与 ‖D‖ 对比柱状图"""
        if measure_df.empty:
            return ""

        fig, ax = plt.subplots(figsize=(10, 6))
        labels = list(measure_df["名称"])
        positions = range(len(labels))
        width = 0.4
        ax.bar([p - width / 2 for p in positions], measure_df["大小"], width, label="|D|")
        ax.bar([p + width / 2 for p in positions], measure_df["权重"], width, label="‖D‖")
        ax.set_xticks(list(positions))
        ax.set_xticklabels(labels, rotation=45, ha="right")
        ax.set_title("表达式度量", fontsize=16, fontweight="bold", pad=20)
        ax.legend(loc="upper right")
        return self._save(fig, filename)

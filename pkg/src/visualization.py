"""
Visualization Module
Interactive plotly figures for comparison matrices, condition reports and
well-founded-part ranks
"""

from typing import Callable, Optional, Sequence

import numpy as np
import pandas as pd
import plotly.express as px
import plotly.graph_objects as go
from plotly.subplots import make_subplots

from config import *


class WorkbenchVisualizer:
    """
    Creates visualizations for workbench runs
    """

    def __init__(self, output_dir=FIGURES_DIR):
        self.colors = COLOR_SCHEME
        self.output_dir = output_dir

    def _save(self, fig: go.Figure, name: str) -> None:
        self.output_dir.mkdir(parents=True, exist_ok=True)
        fig.write_html(self.output_dir / name)
        print(f"✅ Saved: {name}")

    def comparison_matrix(self, items: Sequence, cmp: Callable[[object, object], int]) -> np.ndarray:
        """Matrix of cmp(items[i], items[j]) in {-1, 0, 1}"""
        n = len(items)
        matrix = np.zeros((n, n), dtype=int)
        for i in range(n):
            for j in range(n):
                matrix[i, j] = cmp(items[i], items[j])
        return matrix

    def plot_comparison_heatmap(self, items: Sequence, labels: Sequence[str],
                                cmp: Callable[[object, object], int],
                                title: str = "Notation Comparison Matrix") -> go.Figure:
        """
        Heatmap of pairwise comparisons; rows compared against columns

        Args:
            items: Elements in display order (sorted ascending gives a staircase)
            labels: Printable names for the axes
            cmp: Three-way comparison returning -1, 0 or 1
        """
        matrix = self.comparison_matrix(items, cmp)
        fig = go.Figure(data=go.Heatmap(
            z=matrix,
            x=list(labels),
            y=list(labels),
            zmin=-1, zmax=1,
            colorscale=[
                [0, self.colors['info']],
                [0.5, self.colors['background']],
                [1, self.colors['accent']]
            ],
            colorbar=dict(title="cmp", tickvals=[-1, 0, 1], ticktext=['LESS', 'EQUAL', 'GREATER'])
        ))

        fig.update_layout(
            title=title,
            xaxis_title="right operand",
            yaxis_title="left operand",
            height=800,
            font={'family': CHART_STYLE['font_family']}
        )

        self._save(fig, 'comparison_heatmap.html')
        return fig

    def plot_condition_summary(self, reports: pd.DataFrame) -> go.Figure:
        """
        Bars of pairs checked per condition and order, coloured by status

        Args:
            reports: Frame from checkers.reports_to_frame
        """
        frame = reports.copy()
        frame['check'] = frame['order'] + ' / c' + frame['condition'].astype(str)
        fig = px.bar(
            frame, x='check', y='pairs_checked', color='status',
            color_discrete_map=STATUS_COLORS,
            hover_data=['title', 'universe_size', 'note'],
            title='Condition Checks by Order'
        )
        fig.update_layout(
            xaxis_title='order / condition',
            yaxis_title='pairs checked',
            yaxis_type='log',
            font={'family': CHART_STYLE['font_family']},
        )
        self._save(fig, 'condition_summary.html')
        return fig

    def plot_rank_histogram(self, wfp_frame: pd.DataFrame,
                            title: str = "Accessible Rank Distribution") -> go.Figure:
        """
        Histogram of Accessible ranks next to the status breakdown

        Args:
            wfp_frame: Frame from WfpResult.to_frame
        """
        fig = make_subplots(rows=1, cols=2, subplot_titles=('Ranks', 'Status'),
                            specs=[[{'type': 'bar'}, {'type': 'pie'}]])

        ranks = wfp_frame.loc[wfp_frame['status'] == 'ACCESSIBLE', 'rank'].astype(int)
        rank_counts = ranks.value_counts().sort_index()
        fig.add_trace(go.Bar(x=rank_counts.index, y=rank_counts.values,
                             marker=dict(color=self.colors['success']), name='nodes'),
                      row=1, col=1)

        status_counts = wfp_frame['status'].value_counts()
        fig.add_trace(go.Pie(labels=status_counts.index, values=status_counts.values,
                             marker=dict(colors=[self._status_color(s) for s in status_counts.index])),
                      row=1, col=2)

        fig.update_layout(title=title, showlegend=False, height=500,
                          font={'family': CHART_STYLE['font_family']})
        self._save(fig, 'rank_histogram.html')
        return fig

    def plot_universe_growth(self, counts: pd.DataFrame) -> go.Figure:
        """
        Universe size per size bound, one line per signature

        Args:
            counts: Columns size, count, signature
        """
        fig = px.line(counts, x='size', y='count', color='signature', markers=True,
                      title='Ground Terms by Size')
        fig.update_layout(yaxis_type='log', font={'family': CHART_STYLE['font_family']},
                          hovermode='x unified')
        self._save(fig, 'universe_growth.html')
        return fig

    def _status_color(self, status: str) -> Optional[str]:
        return {
            'ACCESSIBLE': self.colors['success'],
            'NON_ACCESSIBLE': self.colors['accent'],
            'UNKNOWN': self.colors['warning'],
        }.get(status)

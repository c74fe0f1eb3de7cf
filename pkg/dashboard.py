import streamlit as st
import pandas as pd
import plotly.express as px
import plotly.graph_objects as go
from pathlib import Path
from datetime import datetime

# --- CONFIGURATION ---
st.set_page_config(
    page_title="Simpord Workbench",
    page_icon="📊",
    layout="wide",
    initial_sidebar_state="expanded"
)

# Constants for styling (mirrors src/config.py COLOR_SCHEME)
COLOR_PRIMARY = '#2E2E2E'
COLOR_ACCENT = '#EB5757'
COLOR_SUCCESS = '#0F7B6C'
COLOR_WARNING = '#FFA344'
STATUS_COLORS = {'PASS': COLOR_SUCCESS, 'FAIL': COLOR_ACCENT, 'INCONCLUSIVE': COLOR_WARNING}

# --- DATA LOADING ---
@st.cache_data
def load_data():
    """Load all processed tables from CSVs"""
    data_path = Path("data/processed")

    try:
        return {
            "suites": pd.read_csv(data_path / "property_suites.csv"),
            "reports": pd.read_csv(data_path / "condition_reports.csv"),
            "chains": pd.read_csv(data_path / "descending_chains.csv"),
            "growth": pd.read_csv(data_path / "universe_growth.csv"),
            "graphs": pd.read_csv(data_path / "random_graphs.csv"),
            "ranks": pd.read_csv(data_path / "term_ranks.csv"),
        }
    except FileNotFoundError as e:
        st.error(f"❌ Could not find data files. Please run 'python scripts/run_full_analysis.py' first.\nError: {e}")
        return None

data = load_data()

if not data:
    st.stop()

# --- SIDEBAR ---
with st.sidebar:
    st.title("📊 Simpord Workbench")
    st.markdown("---")
    st.write("Navigation")
    page = st.radio("Go to", ["Overview", "Condition Checks", "Universes & Ranks"])

    st.markdown("---")
    st.info(f"**Data Loaded:**\n{len(data['reports'])} condition reports, "
            f"{len(data['suites'])} property suites")

# --- OVERVIEW PAGE ---
if page == "Overview":
    st.title("🧪 Property Suites")

    kpi1, kpi2, kpi3 = st.columns(3)
    suites = data["suites"]
    reports = data["reports"]
    kpi1.metric("Suites Passed", f"{(suites['status'] == 'PASS').sum()}/{len(suites)}")
    kpi2.metric("Condition Checks", f"{len(reports):,}")
    kpi3.metric("Failures", f"{(reports['status'] == 'FAIL').sum()}")

    st.markdown("---")
    fig_suites = px.bar(
        suites,
        y="suite",
        x="checked",
        color="status",
        orientation='h',
        color_discrete_map=STATUS_COLORS,
        log_x=True,
        labels={"checked": "Items Checked", "suite": ""}
    )
    fig_suites.update_layout(height=500, margin=dict(t=0, b=0))
    st.plotly_chart(fig_suites, use_container_width=True)

    st.dataframe(suites, use_container_width=True)
    st.caption("Every verdict concerns the finite universe examined; a PASS is not a proof.")

# --- CONDITION CHECKS PAGE ---
elif page == "Condition Checks":
    st.title("✅ Condition Checks")

    orders = sorted(data["reports"]["order"].unique())
    chosen = st.multiselect("Orders", options=orders, default=orders[:5])
    shown = data["reports"][data["reports"]["order"].isin(chosen)]

    pivot = shown.pivot_table(index="order", columns="condition", values="status",
                              aggfunc="first")
    status_code = pivot.replace({'PASS': 1, 'INCONCLUSIVE': 0, 'FAIL': -1})
    fig_grid = go.Figure(data=go.Heatmap(
        z=status_code.values,
        x=[f"condition {c}" for c in status_code.columns],
        y=status_code.index,
        zmin=-1, zmax=1,
        colorscale=[[0, COLOR_ACCENT], [0.5, COLOR_WARNING], [1, COLOR_SUCCESS]],
        text=pivot.values,
        texttemplate='%{text}',
        showscale=False
    ))
    fig_grid.update_layout(height=max(300, 40 * len(status_code)))
    st.plotly_chart(fig_grid, use_container_width=True)

    st.markdown("---")
    st.subheader("Witnesses")
    witnesses = shown[shown["witness"].notna()][["order", "condition", "status", "witness", "note"]]
    if len(witnesses):
        st.dataframe(witnesses, use_container_width=True)
    else:
        st.write("No witnesses recorded for the selected orders.")

# --- UNIVERSES PAGE ---
elif page == "Universes & Ranks":
    st.title("🌱 Universes & Well-Founded Ranks")

    col1, col2 = st.columns(2)

    with col1:
        st.subheader("Ground Terms by Size")
        fig_growth = px.line(data["growth"], x="size", y="count", color="signature",
                             markers=True, log_y=True)
        st.plotly_chart(fig_growth, use_container_width=True)

    with col2:
        st.subheader("Accessible Ranks (F_1 terms)")
        ranks = data["ranks"][data["ranks"]["status"] == "ACCESSIBLE"]
        fig_ranks = px.histogram(ranks, x="rank", color_discrete_sequence=[COLOR_PRIMARY])
        st.plotly_chart(fig_ranks, use_container_width=True)

    st.markdown("---")
    st.subheader("Descending Chain Searches")
    st.dataframe(data["chains"], use_container_width=True)

    st.subheader("Random Relations")
    fig_graphs = px.scatter(data["graphs"], x="nodes", y="edges", hover_data=["self_loops"],
                            color_discrete_sequence=[COLOR_ACCENT])
    st.plotly_chart(fig_graphs, use_container_width=True)

# --- FOOTER ---
st.markdown("---")
st.markdown("""
    <div style='text-align: center; color: #6b7280; padding: 20px;'>
        <p>📊 <strong>Simpord Workbench</strong> - bounded checks for termination orders</p>
        <p>Built with Python, Streamlit, Plotly & Pandas <strong>| Last Updated:</strong> {}</p>
    </div>
""".format(datetime.now().strftime("%B %d, %Y")), unsafe_allow_html=True)

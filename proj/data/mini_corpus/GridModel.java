public class GridModel {
    private int rowCount;
    private int columnCount;

    // get the row count of the grid
    public int getRowCount() {
        return rowCount;
    }

    // get the column count of the grid
    public int getColumnCount() {
        return columnCount;
    }

    // resizes the grid to the requested row and column count
    public void resizeGrid(int rows, int columns) {
        rowCount = rows;
        columnCount = columns;
    }
}

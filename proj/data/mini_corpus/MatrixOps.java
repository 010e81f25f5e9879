public class MatrixOps {
    /** multiplies the matrix rows by a scalar factor in place */
    public void scaleMatrixRows(double[][] matrix, double factor) {
        for (int r = 0; r < matrix.length; r++) {
            for (int c = 0; c < matrix[r].length; c++) {
                matrix[r][c] = matrix[r][c] * factor;
            }
        }
    }
}
